#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "plutus/geometry.hpp"
#include "plutus/pipeline.hpp"
#include "plutus/verification.hpp"

namespace plutus::io {

inline constexpr int kSchemaVersion = 1;

// Graph documents come in two shapes:
//   {"n": 3, "edges": [[0,1],[1,2]]}
//   {"n": 3, "points": [[x,y],...], "radius": r}   (edges derived)
struct GraphDocument {
  Graph graph;
  std::optional<UdgInstance> udg;
};

GraphDocument graph_from_json(const nlohmann::json& doc);
nlohmann::json graph_to_json(const Graph& g);
nlohmann::json udg_to_json(const UdgInstance& udg);

// {"D": [...], "k": k, "m": m, "phases": [...], "roles": {"<id>": "..."}}
nlohmann::json result_to_json(const PlutusResult& result, const PlutusConfig& config);

struct ResultDocument {
  VertexSet dominating_set;
  int k = 1;
  int m = 1;
};

ResultDocument result_from_json(const nlohmann::json& doc);

// {"overall": bool, "checks": [{"name", "pass", "witness": [...]|null, ...}]}
nlohmann::json report_to_json(const VerificationReport& report);
nlohmann::json check_to_json(const Check& check);
nlohmann::json stretch_to_json(const StretchReport& stretch);
nlohmann::json oracle_to_json(const OracleResult& oracle, int k, int m);

// Undirected DOT; dominators black, reluctant gray, prone white; D is
// grouped in its own subgraph.
std::string to_dot(const Graph& g, const PlutusResult& result);

nlohmann::json read_json_file(const std::filesystem::path& path);
// Writes doc.dump(2) plus a trailing newline. Throws Io when
// the file cannot be written.
void write_json_file(const std::filesystem::path& path, const nlohmann::json& doc);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace plutus::io
