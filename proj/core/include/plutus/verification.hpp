#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plutus/graph.hpp"

namespace plutus {

enum class WitnessKind {
  AdjacentPair,      // two members joined by an edge
  AddableVertex,     // non-member with no member neighbour
  Undominated,       // non-member with no neighbour in the set
  Disconnected,      // two members in different induced components
  Deficient,         // non-member with fewer than k neighbours in the set
  Separator,         // removal of `vertices` separates `separated`
  TooSmall,          // fewer than m + 1 members
};

std::string_view to_string(WitnessKind kind);

struct Witness {
  WitnessKind kind = WitnessKind::TooSmall;
  VertexSet vertices{};
  std::optional<std::pair<Vertex, Vertex>> separated{};
  std::optional<int> dominator_count{};  // for Deficient
};

struct Check {
  std::string name;
  bool pass = true;
  std::optional<Witness> witness;  // set iff !pass
};

struct VerificationReport {
  std::vector<Check> checks;
  bool overall = true;

  void add(Check check);
};

Check is_maximal_independent_set(const Graph& g, const VertexSet& s);
Check is_connected_dominating_set(const Graph& g, const VertexSet& s);
Check is_k_dominating(const Graph& g, const VertexSet& s, int k);
Check m_connectivity_check(const Graph& g, const VertexSet& s, int m);

// Full certificate: k-dominance plus m-connectivity of the induced subgraph.
VerificationReport is_m_connected_k_dominating(const Graph& g, const VertexSet& s, int k, int m);

struct StretchReport {
  double max_stretch = 1.0;
  std::optional<std::pair<Vertex, Vertex>> worst_pair;
  std::size_t pairs = 0;
};

// Max over connected pairs u != v of d_backbone(u, v) / d(u, v), where
// d_backbone only routes through internal vertices of s. Infinite when some
// pair cannot be routed through s at all.
StretchReport backbone_stretch(const Graph& g, const VertexSet& s);

struct OracleResult {
  std::optional<std::size_t> optimum_size;  // nullopt: infeasible up to size_cap
  VertexSet optimum_witness;
  std::uint64_t sets_examined = 0;
};

inline constexpr int kOracleMaxNodes = 20;

// Exhaustive minimum m-connected k-dominating set: subsets in ascending
// size, lexicographic within a size; the first valid one is returned.
// Throws TooLarge above kOracleMaxNodes.
OracleResult brute_force_min_mcds(const Graph& g, int k, int m,
                                  std::optional<int> size_cap = std::nullopt);

}  // namespace plutus
