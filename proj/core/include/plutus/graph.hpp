#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "plutus/errors.hpp"

namespace plutus {

using Edge = std::pair<Vertex, Vertex>;

// Undirected simple graph over vertices 0..node_count()-1. Neighbor lists
// are sorted ascending, so every traversal built on top is deterministic.
class Graph {
 public:
  Graph() = default;

  // Throws SelfLoop / VertexOutOfRange. Duplicate edges (in either
  // orientation) are collapsed.
  static Graph from_edge_list(int n, std::span<const Edge> edges);

  int node_count() const noexcept { return static_cast<int>(adjacency_.size()); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  bool has_edge(Vertex u, Vertex v) const;
  bool contains(Vertex v) const noexcept { return v >= 0 && v < node_count(); }

  // Edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  VertexSet vertices() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

// Membership flags indexed by vertex id.
using VertexMask = std::vector<char>;

VertexMask make_mask(int n, std::span<const Vertex> vertices);

// Sorts and deduplicates in place; returns the argument for chaining.
VertexSet normalized(VertexSet vertices);

// Number of edges of g with both endpoints in subset.
std::size_t induced_edge_count(const Graph& g, std::span<const Vertex> subset);

}  // namespace plutus
