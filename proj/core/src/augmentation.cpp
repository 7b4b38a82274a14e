#include <algorithm>
#include <optional>
#include <set>

#include "plutus/blocks.hpp"
#include "plutus/pipeline.hpp"
#include "plutus/traversal.hpp"

namespace plutus {

namespace {

struct Augmentation {
  std::vector<Vertex> path;  // endpoints in D, internals promoted
  VertexSet promoted;
};

int resolve_cap(const Graph& g, int max_iterations) {
  return max_iterations > 0 ? max_iterations : 10 * std::max(1, g.node_count());
}

VertexSet without(const VertexSet& set, Vertex v) {
  VertexSet out;
  out.reserve(set.size());
  for (Vertex x : set) {
    if (x != v) out.push_back(x);
  }
  return out;
}

// One ear that merges the smallest leaf block of induced(core) into the rest
// of core. Internal vertices lie outside D and differ from `excluded`.
// Cores of one or two vertices are grown toward a triangle instead.
std::optional<Augmentation> find_augmentation(const Graph& g, const VertexMask& in_d,
                                              const VertexSet& core, Vertex excluded,
                                              VertexSet& stuck) {
  auto allowed = [&](Vertex w) { return !in_d[w] && w != excluded; };

  if (core.size() == 1) {
    stuck = core;
    for (Vertex w : g.neighbors(core.front())) {
      if (allowed(w)) return Augmentation{{core.front(), w}, {w}};
    }
    return std::nullopt;
  }

  std::optional<std::vector<Vertex>> path;
  if (core.size() == 2) {
    stuck = core;
    const Vertex a[] = {core[0]};
    const Vertex b[] = {core[1]};
    path = shortest_bridge(g, a, b, allowed);
  } else {
    const BlockCutTree tree = block_cut_tree(g, core);
    if (tree.leaf_blocks.empty()) return std::nullopt;
    const VertexSet& leaf = tree.leaf_blocks.front();
    stuck = leaf;
    VertexSet sources;
    for (Vertex v : leaf) {
      if (!std::binary_search(tree.cut_vertices.begin(), tree.cut_vertices.end(), v)) {
        sources.push_back(v);
      }
    }
    VertexSet targets;
    std::set_difference(core.begin(), core.end(), leaf.begin(), leaf.end(),
                        std::back_inserter(targets));
    path = shortest_bridge(g, sources, targets, allowed);
  }
  if (!path) return std::nullopt;
  Augmentation aug;
  aug.promoted = normalized(VertexSet(path->begin() + 1, path->end() - 1));
  aug.path = std::move(*path);
  return aug;
}

void absorb(VertexSet& d, VertexMask& in_d, const VertexSet& promoted) {
  for (Vertex v : promoted) in_d[v] = 1;
  d.insert(d.end(), promoted.begin(), promoted.end());
  std::sort(d.begin(), d.end());
}

}  // namespace

VertexSet diversification(const Graph& g, const VertexSet& d, int max_iterations) {
  VertexSet current = normalized(d);
  if (current.empty() || !is_connected_subset(g, current)) {
    throw Error(ErrorKind::DisconnectedInput, "diversification needs a connected backbone");
  }
  const int cap = resolve_cap(g, max_iterations);
  VertexMask in_d = make_mask(g.node_count(), current);
  int rounds = 0;
  while (!is_biconnected(g, current)) {
    if (++rounds > cap) {
      throw Error(ErrorKind::IterationCapExceeded,
                  "diversification exceeded " + std::to_string(cap) + " rounds");
    }
    VertexSet stuck;
    const auto aug = find_augmentation(g, in_d, current, -1, stuck);
    if (!aug) {
      throw Error(ErrorKind::Infeasible2Connectivity,
                  "no path outside D reattaches the leaf block", stuck);
    }
    absorb(current, in_d, aug->promoted);
  }
  return current;
}

VertexSet sustainability(const Graph& g, const VertexSet& d, int max_iterations) {
  VertexSet current = normalized(d);
  if (!is_biconnected(g, current)) {
    throw Error(ErrorKind::InvalidArgument, "sustainability needs a 2-connected backbone");
  }
  const int cap = resolve_cap(g, max_iterations);
  VertexMask in_d = make_mask(g.node_count(), current);

  // Vertices whose status is unknown. A good point stays good when an ear is
  // added unless it is one of the ear's endpoints.
  std::set<Vertex> unchecked(current.begin(), current.end());
  int rounds = 0;
  while (true) {
    std::optional<Vertex> bad;
    for (auto it = unchecked.begin(); it != unchecked.end();) {
      if (!is_biconnected(g, without(current, *it))) {
        bad = *it;
        break;
      }
      it = unchecked.erase(it);
    }
    if (!bad) break;

    if (++rounds > cap) {
      throw Error(ErrorKind::IterationCapExceeded,
                  "sustainability exceeded " + std::to_string(cap) + " rounds");
    }
    VertexSet stuck;
    const auto aug = find_augmentation(g, in_d, without(current, *bad), *bad, stuck);
    if (!aug) {
      throw Error(ErrorKind::Infeasible3Connectivity,
                  "bad point " + std::to_string(*bad) + " cannot be repaired", {*bad});
    }
    absorb(current, in_d, aug->promoted);
    unchecked.insert(aug->promoted.begin(), aug->promoted.end());
    unchecked.insert(aug->path.front());
    unchecked.insert(aug->path.back());
  }
  return current;
}

}  // namespace plutus
