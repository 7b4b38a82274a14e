#include "plutus/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace plutus::io {

using nlohmann::json;

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorKind::Parse, what); }

template <typename T>
T field(const json& doc, const char* key) {
  if (!doc.contains(key)) parse_error(std::string("missing field \"") + key + "\"");
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception& e) {
    parse_error(std::string("field \"") + key + "\": " + e.what());
  }
}

json witness_vertices(const Witness& w) { return json(w.vertices); }

}  // namespace

GraphDocument graph_from_json(const json& doc) {
  if (!doc.is_object()) parse_error("graph document must be an object");
  const int n = field<int>(doc, "n");
  if (n < 0) parse_error("n must be non-negative");
  const bool has_points = doc.contains("points");
  const bool has_radius = doc.contains("radius");
  const bool has_edges = doc.contains("edges");

  GraphDocument out;
  if (has_points || has_radius) {
    if (!(has_points && has_radius)) parse_error("points and radius must appear together");
    if (has_edges) parse_error("edges must be absent when points and radius are given");
    const auto raw = field<std::vector<std::vector<double>>>(doc, "points");
    if (static_cast<int>(raw.size()) != n) parse_error("points length differs from n");
    UdgInstance udg;
    udg.radius = field<double>(doc, "radius");
    for (const auto& p : raw) {
      if (p.size() != 2) parse_error("each point must be [x, y]");
      udg.points.push_back({p[0], p[1]});
    }
    out.graph = udg.graph();
    out.udg = std::move(udg);
    return out;
  }

  std::vector<Edge> edges;
  if (has_edges) {
    for (const auto& e : field<std::vector<std::vector<int>>>(doc, "edges")) {
      if (e.size() != 2) parse_error("each edge must be [u, v]");
      edges.emplace_back(e[0], e[1]);
    }
  }
  out.graph = Graph::from_edge_list(n, edges);
  return out;
}

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return json{{"version", kSchemaVersion}, {"n", g.node_count()}, {"edges", std::move(edges)}};
}

json udg_to_json(const UdgInstance& udg) {
  json points = json::array();
  for (const auto& p : udg.points) points.push_back({p.x, p.y});
  return json{{"version", kSchemaVersion},
              {"n", udg.points.size()},
              {"points", std::move(points)},
              {"radius", udg.radius}};
}

json result_to_json(const PlutusResult& result, const PlutusConfig& config) {
  json phases = json::array();
  for (const auto& phase : result.phase_trace) {
    phases.push_back({{"name", phase.name}, {"size", phase.size}, {"added", phase.added}});
  }
  json roles = json::object();
  for (std::size_t v = 0; v < result.roles.size(); ++v) {
    roles[std::to_string(v)] = std::string(to_string(result.roles[v]));
  }
  return json{{"version", kSchemaVersion},
              {"D", result.dominating_set},
              {"k", config.k},
              {"m", config.m},
              {"phases", std::move(phases)},
              {"roles", std::move(roles)}};
}

ResultDocument result_from_json(const json& doc) {
  if (!doc.is_object()) parse_error("result document must be an object");
  ResultDocument out;
  out.dominating_set = normalized(field<VertexSet>(doc, "D"));
  out.k = doc.contains("k") ? field<int>(doc, "k") : 1;
  out.m = doc.contains("m") ? field<int>(doc, "m") : 1;
  return out;
}

json check_to_json(const Check& check) {
  json out{{"name", check.name}, {"pass", check.pass}, {"witness", nullptr}};
  if (check.witness) {
    const Witness& w = *check.witness;
    out["witness"] = witness_vertices(w);
    out["witness_kind"] = std::string(to_string(w.kind));
    if (w.separated) out["separated"] = {w.separated->first, w.separated->second};
    if (w.dominator_count) out["dominator_count"] = *w.dominator_count;
  }
  return out;
}

json report_to_json(const VerificationReport& report) {
  json checks = json::array();
  for (const auto& check : report.checks) checks.push_back(check_to_json(check));
  return json{{"version", kSchemaVersion}, {"overall", report.overall}, {"checks", std::move(checks)}};
}

json stretch_to_json(const StretchReport& stretch) {
  json out{{"pairs", stretch.pairs}, {"worst_pair", nullptr}};
  // JSON has no infinity; an unroutable pair is reported as null.
  out["max_stretch"] = std::isfinite(stretch.max_stretch) ? json(stretch.max_stretch) : json(nullptr);
  if (stretch.worst_pair) out["worst_pair"] = {stretch.worst_pair->first, stretch.worst_pair->second};
  return out;
}

json oracle_to_json(const OracleResult& oracle, int k, int m) {
  json out{{"version", kSchemaVersion}, {"k", k}, {"m", m}, {"sets_examined", oracle.sets_examined}};
  if (oracle.optimum_size) {
    out["feasible"] = true;
    out["optimum_size"] = *oracle.optimum_size;
    out["optimum_witness"] = oracle.optimum_witness;
  } else {
    out["feasible"] = false;
    out["optimum_size"] = nullptr;
    out["optimum_witness"] = nullptr;
  }
  return out;
}

std::string to_dot(const Graph& g, const PlutusResult& result) {
  std::ostringstream out;
  out << "graph plutus {\n  node [style=filled];\n";
  for (Vertex v = 0; v < g.node_count(); ++v) {
    const Role role = v < static_cast<Vertex>(result.roles.size()) ? result.roles[v]
                                                                    : Role::DominationProne;
    const char* fill = role == Role::Dominator             ? "black"
                       : role == Role::DominationReluctant ? "gray"
                                                           : "white";
    const char* font = role == Role::Dominator ? "white" : "black";
    out << "  " << v << " [fillcolor=" << fill << ", fontcolor=" << font << "];\n";
  }
  out << "  subgraph cluster_D {\n    label=\"D\";\n";
  for (Vertex v : result.dominating_set) out << "    " << v << ";\n";
  out << "  }\n";
  for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    parse_error(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorKind::Io, "write failed for " + path.string());
}

void write_json_file(const std::filesystem::path& path, const json& doc) {
  write_text_file(path, doc.dump(2) + "\n");
}

}  // namespace plutus::io
