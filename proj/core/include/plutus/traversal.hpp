#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "plutus/graph.hpp"

namespace plutus {

inline constexpr int kUnreachable = -1;

// Hop distances from source; kUnreachable where no path exists.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

// BFS hop count, nullopt when v is unreachable from u.
std::optional<int> hop_distance(const Graph& g, Vertex u, Vertex v);

using VertexPredicate = std::function<bool(Vertex)>;

struct PathConstraints {
  VertexSet forbidden;
  // Internal (non-endpoint) vertices must satisfy this when set.
  VertexPredicate internal_allowed;
};

// Shortest u-v path avoiding `forbidden` whose internal vertices satisfy the
// constraint. Among shortest paths the lexicographically smallest vertex
// sequence is returned. nullopt when no such path exists.
std::optional<std::vector<Vertex>> shortest_path(const Graph& g, Vertex u, Vertex v,
                                                 const PathConstraints& constraints = {});

// Shortest path from some vertex of `sources` to some vertex of `targets`
// with at least one internal vertex, every internal vertex satisfying
// `internal_allowed`. Lexicographically smallest sequence among the
// shortest. Sources and targets are expected to be disjoint.
std::optional<std::vector<Vertex>> shortest_bridge(const Graph& g,
                                                   std::span<const Vertex> sources,
                                                   std::span<const Vertex> targets,
                                                   const VertexPredicate& internal_allowed);

// Connected components of the subgraph induced by `subset`, each sorted,
// ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g, std::span<const Vertex> subset);

bool is_connected_subset(const Graph& g, std::span<const Vertex> subset);

}  // namespace plutus
