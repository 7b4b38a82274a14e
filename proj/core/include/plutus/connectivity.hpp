#pragma once

#include <optional>
#include <span>
#include <utility>

#include "plutus/graph.hpp"

namespace plutus {

// Why an induced subgraph fails m-connectivity.
struct Separation {
  // Removed vertices (size m-1, possibly empty). Empty together with
  // too_small == true means the subset has too few vertices.
  VertexSet removed;
  // Two surviving vertices that removal disconnects; absent when too_small.
  std::optional<std::pair<Vertex, Vertex>> separated;
  bool too_small = false;
};

// First separation found for the subgraph induced by `subset`, or nullopt
// when it is m-connected. Supported m: 1..3.
//
// m = 1 means connected (a single vertex counts). For m >= 2 the subset
// needs at least m + 1 vertices (K_n is exactly (n-1)-connected) and must
// stay connected after removing every (m-1)-subset. Removal sets are
// enumerated exhaustively; for m = 3 the second vertex of each pair is found
// as an articulation point of the remainder, which covers the same pairs.
std::optional<Separation> find_separation(const Graph& g, std::span<const Vertex> subset, int m);

bool is_m_connected(const Graph& g, std::span<const Vertex> subset, int m);

}  // namespace plutus
