#pragma once

#include <span>
#include <vector>

#include "plutus/graph.hpp"

namespace plutus {

// Biconnected-component decomposition of an induced subgraph.
struct BlockCutTree {
  std::vector<VertexSet> blocks;       // sorted lexicographically (smallest member first)
  VertexSet cut_vertices;              // vertices lying in >= 2 blocks
  std::vector<VertexSet> leaf_blocks;  // blocks holding exactly one cut vertex

  bool is_single_block() const noexcept { return blocks.size() == 1; }
};

// Hopcroft-Tarjan articulation decomposition of the subgraph induced by
// `subset`. A lone vertex forms a single trivial block. Throws
// DisconnectedInput when the induced subgraph is disconnected.
BlockCutTree block_cut_tree(const Graph& g, std::span<const Vertex> subset);

// True iff `subset` has >= 3 vertices and induces a connected subgraph with
// no cut vertex.
bool is_biconnected(const Graph& g, std::span<const Vertex> subset);

}  // namespace plutus
