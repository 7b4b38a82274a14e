#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"

#include "plutus/connectivity.hpp"
#include "plutus/geometry.hpp"
#include "plutus/io.hpp"
#include "plutus/pipeline.hpp"
#include "plutus/verification.hpp"

namespace plutus::cli {

using nlohmann::json;

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse:
    case ErrorKind::SelfLoop:
    case ErrorKind::VertexOutOfRange:
    case ErrorKind::NonFiniteCoordinate:
    case ErrorKind::InvalidArgument:
      return kParseError;
    case ErrorKind::EmptyGraph:
    case ErrorKind::DisconnectedInput:
    case ErrorKind::GraphNotMConnected:
      return kPreflight;
    case ErrorKind::InfeasibleKDominance:
    case ErrorKind::Infeasible2Connectivity:
    case ErrorKind::Infeasible3Connectivity:
      return kInfeasible;
    case ErrorKind::IterationCapExceeded:
      return kIterationCap;
    case ErrorKind::TooLarge:
    case ErrorKind::Io:
      return kFailure;
  }
  return kFailure;
}

namespace {

int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error: " << e.what();
    if (!e.witness().empty()) {
      err << " (witness:";
      for (Vertex v : e.witness()) err << ' ' << v;
      err << ')';
    }
    err << '\n';
    return exit_code_for(e.kind());
  } catch (const json::exception& e) {
    err << "error: malformed JSON: " << e.what() << '\n';
    return kParseError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

json config_json(int k, int m, int max_iters, bool strict) {
  return json{{"k", k}, {"m", m}, {"max_augmentation_iterations", max_iters}, {"strict", strict}};
}

json manifest(const std::string& command, std::uint64_t seed, std::vector<fs::path> inputs,
              const fs::path& output, json config, json parameters = json::object()) {
  json in = json::array();
  for (const auto& p : inputs) in.push_back(p.generic_string());
  return json{{"version", io::kSchemaVersion},
              {"command", command},
              {"seed", seed},
              {"inputs", std::move(in)},
              {"output", output.generic_string()},
              {"config", std::move(config)},
              {"parameters", std::move(parameters)}};
}

void write_with_manifest(const fs::path& path, const json& doc, const json& manifest_doc) {
  io::write_json_file(path, doc);
  io::write_json_file(manifest_path(path), manifest_doc);
}

void require_range(int k, int m) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "k must be at least 1");
  if (m < 1 || m > 3) throw Error(ErrorKind::InvalidArgument, "m must be 1, 2 or 3");
}

template <typename T>
T parse_number(std::string_view text) {
  T value{};
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || text.empty()) {
    throw Error(ErrorKind::Parse, "not a number: '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> parts;
  while (!text.empty()) {
    const auto comma = text.find(',');
    auto part = text.substr(0, comma);
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
    if (!part.empty()) parts.push_back(part);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return parts;
}

std::int64_t micros(std::chrono::nanoseconds d) {
  return std::chrono::duration_cast<std::chrono::microseconds>(d).count();
}

}  // namespace

std::vector<std::uint64_t> parse_seed_list(const std::string& text) {
  std::vector<std::uint64_t> seeds;
  for (std::string_view part : split_commas(text)) {
    const auto dots = part.find("..");
    if (dots == std::string_view::npos) {
      seeds.push_back(parse_number<std::uint64_t>(part));
      continue;
    }
    const auto lo = parse_number<std::uint64_t>(part.substr(0, dots));
    const auto hi = parse_number<std::uint64_t>(part.substr(dots + 2));
    if (hi < lo) throw Error(ErrorKind::Parse, "empty seed range '" + std::string(part) + "'");
    for (std::uint64_t s = lo;; ++s) {
      seeds.push_back(s);
      if (s == hi) break;
    }
  }
  return seeds;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> values;
  for (std::string_view part : split_commas(text)) values.push_back(parse_number<int>(part));
  return values;
}

std::string instance_file_name(int n, std::uint64_t seed) {
  return "udg_n" + std::to_string(n) + "_s" + std::to_string(seed) + ".json";
}

fs::path manifest_path(const fs::path& output) {
  fs::path p = output;
  p.replace_extension(".manifest.json");
  return p;
}

int cmd_generate(const GenerateOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (o.n < 1) throw Error(ErrorKind::InvalidArgument, "-n must be at least 1");
    if (o.count < 1) throw Error(ErrorKind::InvalidArgument, "--count must be at least 1");
    std::error_code ec;
    fs::create_directories(o.out_dir, ec);
    if (ec) throw Error(ErrorKind::Io, "cannot create " + o.out_dir.string() + ": " + ec.message());
    for (int i = 0; i < o.count; ++i) {
      const std::uint64_t seed = o.seed + static_cast<std::uint64_t>(i);
      const UdgInstance udg = random_geometric(o.n, o.radius, seed);
      const fs::path path = o.out_dir / instance_file_name(o.n, seed);
      write_with_manifest(path, io::udg_to_json(udg),
                          manifest("generate", seed, {}, path, nullptr,
                                   {{"n", o.n}, {"radius", o.radius}, {"count", o.count},
                                    {"first_seed", o.seed}}));
      out << path.generic_string() << '\n';
    }
    return kOk;
  });
}

int cmd_solve(const SolveOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    require_range(o.k, o.m);
    if (o.dot && !o.out) throw Error(ErrorKind::InvalidArgument, "--dot needs --out");
    const io::GraphDocument doc = io::graph_from_json(io::read_json_file(o.input));
    PlutusConfig config;
    config.k = o.k;
    config.m = o.m;
    config.max_augmentation_iterations = o.max_iters;
    config.synergy_mode = o.strict ? SynergyMode::Strict : SynergyMode::BestEffort;
    const PlutusResult result = run_plutus(doc.graph, config);
    const json result_doc = io::result_to_json(result, config);
    if (o.out) {
      write_with_manifest(*o.out, result_doc,
                          manifest("solve", o.seed, {o.input}, *o.out,
                                   config_json(o.k, o.m, o.max_iters, o.strict)));
      if (o.dot) {
        fs::path dot = *o.out;
        dot.replace_extension(".dot");
        io::write_text_file(dot, io::to_dot(doc.graph, result));
      }
    } else {
      out << result_doc.dump(2) << '\n';
    }
    return kOk;
  });
}

int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const io::GraphDocument doc = io::graph_from_json(io::read_json_file(o.graph));
    const io::ResultDocument result = io::result_from_json(io::read_json_file(o.result));
    const int k = o.k.value_or(result.k);
    const int m = o.m.value_or(result.m);
    require_range(k, m);
    for (Vertex v : result.dominating_set) {
      if (!doc.graph.contains(v)) {
        throw Error(ErrorKind::Parse,
                    "result names node " + std::to_string(v) + " but the graph has " +
                        std::to_string(doc.graph.node_count()) + " nodes",
                    {v});
      }
    }
    const VerificationReport report =
        is_m_connected_k_dominating(doc.graph, result.dominating_set, k, m);
    json report_doc = io::report_to_json(report);
    report_doc["k"] = k;
    report_doc["m"] = m;
    if (!result.dominating_set.empty()) {
      const StretchReport stretch = backbone_stretch(doc.graph, result.dominating_set);
      json s = io::stretch_to_json(stretch);
      s["soft_bound"] = o.stretch_bound;
      s["within_soft_bound"] = stretch.max_stretch <= o.stretch_bound;
      report_doc["stretch"] = std::move(s);
    } else {
      report_doc["stretch"] = nullptr;
    }
    out << report_doc.dump(2) << '\n';
    if (o.out) {
      write_with_manifest(*o.out, report_doc,
                          manifest("verify", o.seed, {o.graph, o.result}, *o.out,
                                   config_json(k, m, 0, false)));
    }
    return report.overall ? kOk : kVerificationFailed;
  });
}

int cmd_oracle(const OracleOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    require_range(o.k, o.m);
    const io::GraphDocument doc = io::graph_from_json(io::read_json_file(o.graph));
    const OracleResult result = brute_force_min_mcds(doc.graph, o.k, o.m, o.size_cap);
    const json report = io::oracle_to_json(result, o.k, o.m);
    out << report.dump(2) << '\n';
    if (o.out) {
      write_with_manifest(*o.out, report,
                          manifest("oracle", o.seed, {o.graph}, *o.out, config_json(o.k, o.m, 0, false),
                                   {{"size_cap", o.size_cap ? json(*o.size_cap) : json(nullptr)}}));
    }
    return kOk;
  });
}

namespace {

struct BenchRow {
  int n = 0;
  std::uint64_t seed = 0;
  std::string status;
  std::string reason;
  json detail = json::object();
  std::optional<std::size_t> size;
  bool verified = false;
  double max_stretch = 0.0;
  std::optional<double> ratio;
  std::int64_t total_us = 0;
};

BenchRow bench_instance(const BenchOptions& o, int n, std::uint64_t seed) {
  BenchRow row;
  row.n = n;
  row.seed = seed;
  const Graph g = random_geometric(n, o.radius, seed).graph();
  if (auto sep = find_separation(g, g.vertices(), o.m)) {
    row.status = "skipped";
    row.reason = o.m == 1 ? "graph not connected"
                          : "graph not " + std::to_string(o.m) + "-connected";
    return row;
  }

  PlutusConfig config;
  config.k = o.k;
  config.m = o.m;
  config.max_augmentation_iterations = o.max_iters;
  config.synergy_mode = o.strict ? SynergyMode::Strict : SynergyMode::BestEffort;
  json phases = json::array();
  PlutusResult result;
  try {
    result = run_plutus(g, config, [&](const PhaseRecord& phase, std::chrono::nanoseconds t) {
      phases.push_back({{"name", phase.name}, {"size", phase.size}, {"time_us", micros(t)}});
      row.total_us += micros(t);
    });
  } catch (const Error& e) {
    row.status = "skipped";
    row.reason = e.what();
    return row;
  }

  row.status = "ok";
  row.size = result.dominating_set.size();
  const VerificationReport report = is_m_connected_k_dominating(g, result.dominating_set, o.k, o.m);
  row.verified = report.overall;
  const StretchReport stretch = backbone_stretch(g, result.dominating_set);
  row.max_stretch = stretch.max_stretch;
  row.detail["phases"] = std::move(phases);
  row.detail["verification"] = io::report_to_json(report);
  row.detail["stretch"] = io::stretch_to_json(stretch);
  if (o.oracle && n <= kOracleMaxNodes) {
    const OracleResult oracle = brute_force_min_mcds(g, o.k, o.m);
    row.detail["oracle"] = io::oracle_to_json(oracle, o.k, o.m);
    if (oracle.optimum_size && *oracle.optimum_size > 0) {
      row.ratio = static_cast<double>(*row.size) / static_cast<double>(*oracle.optimum_size);
    }
  }
  return row;
}

std::string fixed(double value, int digits) {
  if (!std::isfinite(value)) return "inf";
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << value;
  return s.str();
}

}  // namespace

int cmd_bench(const BenchOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    require_range(o.k, o.m);
    if (!(o.radius > 0.0) || !std::isfinite(o.radius)) {
      throw Error(ErrorKind::InvalidArgument, "radius must be positive");
    }
    for (int n : o.sizes) {
      if (n < 1) throw Error(ErrorKind::InvalidArgument, "sizes must be at least 1");
    }

    std::vector<BenchRow> rows;
    for (int n : o.sizes) {
      for (std::uint64_t seed : o.seeds) rows.push_back(bench_instance(o, n, seed));
    }

    json row_docs = json::array();
    json violations = json::array();
    std::size_t ok = 0, skipped = 0, verified = 0, ratios = 0;
    double sum_size = 0.0, sum_stretch = 0.0, worst_stretch = 0.0, sum_ratio = 0.0, max_ratio = 0.0;

    out << std::left << std::setw(6) << "n" << std::setw(8) << "seed" << std::setw(9) << "status"
        << std::setw(7) << "|D|" << std::setw(10) << "verified" << std::setw(9) << "stretch"
        << std::setw(8) << "ratio" << "time_us\n";
    for (const BenchRow& row : rows) {
      json doc{{"n", row.n}, {"seed", row.seed}, {"status", row.status}};
      out << std::left << std::setw(6) << row.n << std::setw(8) << row.seed << std::setw(9)
          << row.status;
      if (row.status != "ok") {
        doc["reason"] = row.reason;
        out << row.reason << '\n';
        ++skipped;
        row_docs.push_back(std::move(doc));
        continue;
      }
      ++ok;
      verified += row.verified;
      sum_size += static_cast<double>(*row.size);
      sum_stretch += row.max_stretch;
      worst_stretch = std::max(worst_stretch, row.max_stretch);
      doc["D_size"] = *row.size;
      doc["verified"] = row.verified;
      doc["total_time_us"] = row.total_us;
      doc.update(row.detail);
      if (row.max_stretch > o.stretch_bound) {
        violations.push_back({{"n", row.n}, {"seed", row.seed}, {"stretch", row.detail["stretch"]}});
      }
      if (row.ratio) {
        ++ratios;
        sum_ratio += *row.ratio;
        max_ratio = std::max(max_ratio, *row.ratio);
        doc["ratio"] = *row.ratio;
      }
      out << std::setw(7) << *row.size << std::setw(10) << (row.verified ? "pass" : "FAIL")
          << std::setw(9) << fixed(row.max_stretch, 3) << std::setw(8)
          << (row.ratio ? fixed(*row.ratio, 3) : std::string("-")) << row.total_us << '\n';
      row_docs.push_back(std::move(doc));
    }
    const int exit_code = verified == ok ? kOk : kVerificationFailed;

    const auto mean = [](double sum, std::size_t count) {
      return count == 0 ? json(nullptr) : json(sum / static_cast<double>(count));
    };
    json summary{{"rows", rows.size()},
                 {"ok", ok},
                 {"skipped", skipped},
                 {"verified", verified},
                 {"mean_D", mean(sum_size, ok)},
                 {"mean_max_stretch", mean(sum_stretch, ok)},
                 {"max_stretch", ok == 0 ? json(nullptr) : std::isfinite(worst_stretch) ? json(worst_stretch) : json(nullptr)},
                 {"stretch_soft_bound", o.stretch_bound},
                 {"stretch_violations", std::move(violations)},
                 {"oracle_instances", ratios},
                 {"mean_ratio", mean(sum_ratio, ratios)},
                 {"max_ratio", ratios == 0 ? json(nullptr) : json(max_ratio)}};

    out << "rows=" << rows.size() << " ok=" << ok << " skipped=" << skipped
        << " verified=" << verified;
    if (ok > 0) {
      out << " mean|D|=" << fixed(sum_size / static_cast<double>(ok), 2)
          << " max_stretch=" << fixed(worst_stretch, 3);
    }
    if (ratios > 0) {
      out << " mean_ratio=" << fixed(sum_ratio / static_cast<double>(ratios), 3)
          << " max_ratio=" << fixed(max_ratio, 3);
    }
    out << '\n';

    if (o.out) {
      json seeds = json::array();
      for (auto s : o.seeds) seeds.push_back(s);
      const json doc{{"version", io::kSchemaVersion},
                     {"k", o.k},
                     {"m", o.m},
                     {"radius", o.radius},
                     {"rows", std::move(row_docs)},
                     {"summary", std::move(summary)}};
      write_with_manifest(*o.out, doc,
                          manifest("bench", o.seeds.empty() ? 0 : o.seeds.front(), {}, *o.out,
                                   config_json(o.k, o.m, o.max_iters, o.strict),
                                   {{"sizes", o.sizes},
                                    {"seeds", std::move(seeds)},
                                    {"radius", o.radius},
                                    {"oracle", o.oracle}}));
    }
    return exit_code;
  });
}

}  // namespace plutus::cli

namespace plutus::cli {

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Connected k-dominating backbones for unit disk graphs", "plutus"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  const auto add_seed = [&](CLI::App* sub) {
    sub->add_option("--seed", seed, "Run seed recorded in the manifest")->envname("PLUTUS_SEED");
  };

  GenerateOptions gen;
  auto* generate = app.add_subcommand("generate", "Write random unit disk graph instances");
  generate->add_option("-n", gen.n, "Node count")->required();
  generate->add_option("-r,--radius", gen.radius, "Disk radius in the unit square");
  generate->add_option("--count", gen.count, "Number of instances (seeds seed, seed+1, ...)");
  generate->add_option("--out", gen.out_dir, "Output directory");
  add_seed(generate);

  SolveOptions solve;
  std::string solve_out;
  auto* solve_cmd = app.add_subcommand("solve", "Build an m-connected k-dominating set");
  solve_cmd->add_option("input", solve.input, "Graph JSON")->required();
  solve_cmd->add_option("-k", solve.k, "Domination multiplicity");
  solve_cmd->add_option("-m", solve.m, "Connectivity of the backbone (1..3)");
  solve_cmd->add_option("--out", solve_out, "Result JSON path (stdout when absent)");
  solve_cmd->add_flag("--dot", solve.dot, "Also write a DOT file next to --out");
  solve_cmd->add_flag("--strict", solve.strict, "Fail instead of promoting k-deficient nodes");
  solve_cmd->add_option("--max-iters", solve.max_iters, "Augmentation cap (0 = 10n)");
  add_seed(solve_cmd);

  VerifyOptions verify;
  std::optional<int> verify_k, verify_m;
  std::string verify_out;
  auto* verify_cmd = app.add_subcommand("verify", "Check a result against its graph");
  verify_cmd->add_option("graph", verify.graph, "Graph JSON")->required();
  verify_cmd->add_option("result", verify.result, "Result JSON")->required();
  verify_cmd->add_option("-k", verify_k, "Override k from the result");
  verify_cmd->add_option("-m", verify_m, "Override m from the result");
  verify_cmd->add_option("--out", verify_out, "Also write the report here");
  verify_cmd->add_option("--stretch-bound", verify.stretch_bound, "Soft stretch bound to flag");
  add_seed(verify_cmd);

  OracleOptions oracle;
  std::optional<int> size_cap;
  std::string oracle_out;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive minimum for small graphs");
  oracle_cmd->add_option("graph", oracle.graph, "Graph JSON")->required();
  oracle_cmd->add_option("-k", oracle.k, "Domination multiplicity");
  oracle_cmd->add_option("-m", oracle.m, "Connectivity (1..3)");
  oracle_cmd->add_option("--size-cap", size_cap, "Largest subset size to try");
  oracle_cmd->add_option("--out", oracle_out, "Also write the result here");
  add_seed(oracle_cmd);

  BenchOptions bench;
  std::string sizes_text, seeds_text, bench_out;
  auto* bench_cmd = app.add_subcommand("bench", "Run the pipeline over a seeded corpus");
  bench_cmd->add_option("-n", sizes_text, "Comma separated node counts")->required();
  bench_cmd->add_option("-r,--radius", bench.radius, "Disk radius");
  bench_cmd->add_option("--seeds", seeds_text, "Seed list such as 1..20 or 3,5");
  bench_cmd->add_option("-k", bench.k, "Domination multiplicity");
  bench_cmd->add_option("-m", bench.m, "Connectivity (1..3)");
  bench_cmd->add_flag("--strict", bench.strict, "Synergy strict mode");
  bench_cmd->add_option("--max-iters", bench.max_iters, "Augmentation cap (0 = 10n)");
  bench_cmd->add_flag("--oracle", bench.oracle, "Compare with the exhaustive optimum when n <= 20");
  bench_cmd->add_option("--out", bench_out, "Also write the table as JSON");
  bench_cmd->add_option("--stretch-bound", bench.stretch_bound, "Soft stretch bound to flag");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  const auto optional_path = [](const std::string& text) {
    return text.empty() ? std::optional<fs::path>{} : std::optional<fs::path>{text};
  };
  if (*generate) {
    gen.seed = seed;
    return cmd_generate(gen, out, err);
  }
  if (*solve_cmd) {
    solve.seed = seed;
    solve.out = optional_path(solve_out);
    return cmd_solve(solve, out, err);
  }
  if (*verify_cmd) {
    verify.seed = seed;
    verify.k = verify_k;
    verify.m = verify_m;
    verify.out = optional_path(verify_out);
    return cmd_verify(verify, out, err);
  }
  if (*oracle_cmd) {
    oracle.seed = seed;
    oracle.size_cap = size_cap;
    oracle.out = optional_path(oracle_out);
    return cmd_oracle(oracle, out, err);
  }
  try {
    bench.sizes = parse_int_list(sizes_text);
    bench.seeds = parse_seed_list(seeds_text);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }
  bench.out = optional_path(bench_out);
  return cmd_bench(bench, out, err);
}

}  // namespace plutus::cli
