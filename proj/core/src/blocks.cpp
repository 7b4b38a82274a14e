#include "plutus/blocks.hpp"

#include <algorithm>

#include "plutus/traversal.hpp"

namespace plutus {

namespace {

struct Frame {
  Vertex vertex;
  Vertex parent;
  std::size_t next_neighbor;
};

// Blocks of a connected induced subgraph with >= 2 vertices.
std::vector<VertexSet> decompose(const Graph& g, const VertexSet& subset) {
  const int n = g.node_count();
  const VertexMask in = make_mask(n, subset);
  std::vector<int> disc(n, -1);
  std::vector<int> low(n, 0);
  std::vector<Edge> edge_stack;
  std::vector<VertexSet> blocks;
  int clock = 0;

  auto pop_block = [&](Vertex parent, Vertex child) {
    VertexSet block;
    while (!edge_stack.empty()) {
      const Edge e = edge_stack.back();
      edge_stack.pop_back();
      block.push_back(e.first);
      block.push_back(e.second);
      if (e.first == parent && e.second == child) break;
    }
    blocks.push_back(normalized(std::move(block)));
  };

  const Vertex root = subset.front();
  std::vector<Frame> stack{{root, -1, 0}};
  disc[root] = low[root] = clock++;
  while (!stack.empty()) {
    Frame& top = stack.back();
    const Vertex x = top.vertex;
    const auto nbrs = g.neighbors(x);
    if (top.next_neighbor < nbrs.size()) {
      const Vertex w = nbrs[top.next_neighbor++];
      if (!in[w] || w == top.parent) continue;
      if (disc[w] == -1) {
        edge_stack.emplace_back(x, w);
        disc[w] = low[w] = clock++;
        stack.push_back({w, x, 0});
      } else if (disc[w] < disc[x]) {
        edge_stack.emplace_back(x, w);
        low[x] = std::min(low[x], disc[w]);
      }
      continue;
    }
    const Vertex parent = top.parent;
    stack.pop_back();
    if (parent < 0) continue;
    low[parent] = std::min(low[parent], low[x]);
    if (low[x] >= disc[parent]) pop_block(parent, x);
  }
  return blocks;
}

}  // namespace

BlockCutTree block_cut_tree(const Graph& g, std::span<const Vertex> subset) {
  VertexSet members = normalized(VertexSet(subset.begin(), subset.end()));
  BlockCutTree tree;
  if (members.empty()) return tree;
  if (!is_connected_subset(g, members)) {
    throw Error(ErrorKind::DisconnectedInput, "block decomposition needs a connected subset");
  }
  if (members.size() == 1) {
    tree.blocks.push_back(members);
    return tree;
  }

  tree.blocks = decompose(g, members);
  std::sort(tree.blocks.begin(), tree.blocks.end());

  std::vector<int> membership(g.node_count(), 0);
  for (const auto& block : tree.blocks) {
    for (Vertex v : block) ++membership[v];
  }
  for (Vertex v : members) {
    if (membership[v] >= 2) tree.cut_vertices.push_back(v);
  }
  if (tree.blocks.size() >= 2) {
    for (const auto& block : tree.blocks) {
      const auto cuts = std::count_if(block.begin(), block.end(),
                                      [&](Vertex v) { return membership[v] >= 2; });
      if (cuts == 1) tree.leaf_blocks.push_back(block);
    }
  }
  return tree;
}

bool is_biconnected(const Graph& g, std::span<const Vertex> subset) {
  if (subset.size() < 3 || !is_connected_subset(g, subset)) return false;
  return block_cut_tree(g, subset).is_single_block();
}

}  // namespace plutus
