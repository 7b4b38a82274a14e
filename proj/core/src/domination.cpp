#include <algorithm>
#include <numeric>
#include <queue>
#include <tuple>

#include "plutus/pipeline.hpp"
#include "plutus/traversal.hpp"

namespace plutus {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

constexpr int kPairHorizon = 3;

}  // namespace

VertexSet domination(const Graph& g, const VertexSet& mis) {
  const int n = g.node_count();
  if (!is_connected_subset(g, g.vertices())) {
    throw Error(ErrorKind::DisconnectedInput, "domination needs a connected graph");
  }
  VertexMask in_d = make_mask(n, mis);
  DisjointSets joined(n);
  for (Vertex v : mis) {
    for (Vertex w : g.neighbors(v)) {
      if (in_d[w]) joined.unite(v, w);
    }
  }

  // Trimming: independent-set pairs within the horizon.
  using Pair = std::tuple<int, Vertex, Vertex>;
  std::vector<Pair> pairs;
  std::vector<int> dist(n, kUnreachable);
  std::vector<Vertex> touched;
  for (Vertex u : mis) {
    std::queue<Vertex> frontier;
    dist[u] = 0;
    touched.push_back(u);
    frontier.push(u);
    while (!frontier.empty()) {
      const Vertex x = frontier.front();
      frontier.pop();
      if (dist[x] == kPairHorizon) continue;
      for (Vertex y : g.neighbors(x)) {
        if (dist[y] != kUnreachable) continue;
        dist[y] = dist[x] + 1;
        touched.push_back(y);
        frontier.push(y);
        if (y > u && std::binary_search(mis.begin(), mis.end(), y)) {
          pairs.emplace_back(dist[y], u, y);
        }
      }
    }
    for (Vertex t : touched) dist[t] = kUnreachable;
    touched.clear();
  }
  std::sort(pairs.begin(), pairs.end());

  // Convergence.
  VertexSet d = mis;
  for (const auto& [hops, u, v] : pairs) {
    if (joined.find(u) == joined.find(v)) continue;
    const auto path = shortest_path(g, u, v);
    for (Vertex w : *path) {
      if (!in_d[w]) {
        in_d[w] = 1;
        d.push_back(w);
      }
      for (Vertex x : g.neighbors(w)) {
        if (in_d[x]) joined.unite(w, x);
      }
    }
  }
  d = normalized(std::move(d));
  if (!is_connected_subset(g, d)) {
    throw Error(ErrorKind::DisconnectedInput, "domination produced a disconnected backbone", d);
  }
  return d;
}

SynergyResult synergy(const Graph& g, const VertexSet& d, const VertexSet& first_layer, int k,
                      SynergyMode mode) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "k must be positive");
  const int n = g.node_count();
  SynergyResult result;
  result.layers.push_back(first_layer);
  VertexMask removed = make_mask(n, first_layer);
  VertexMask in_d = make_mask(n, d);
  VertexSet grown = d;

  // Displacement / Adjustment.
  for (int layer = 2; layer <= k; ++layer) {
    VertexSet residual;
    for (Vertex v = 0; v < n; ++v) {
      if (!removed[v]) residual.push_back(v);
    }
    if (residual.empty()) break;
    VertexSet next;
    for (const auto& component : connected_components(g, residual)) {
      const VertexSet part = isolate_within(g, component);
      next.insert(next.end(), part.begin(), part.end());
    }
    next = normalized(std::move(next));
    for (Vertex v : next) {
      removed[v] = 1;
      if (!in_d[v]) {
        in_d[v] = 1;
        grown.push_back(v);
      }
    }
    result.layers.push_back(std::move(next));
  }

  for (Vertex v = 0; v < n; ++v) {
    if (in_d[v]) continue;
    const auto count = std::count_if(g.neighbors(v).begin(), g.neighbors(v).end(),
                                     [&](Vertex w) { return in_d[w] != 0; });
    if (count >= k) continue;
    if (mode == SynergyMode::Strict) {
      throw Error(ErrorKind::InfeasibleKDominance,
                  "node " + std::to_string(v) + " has " + std::to_string(count) +
                      " dominator neighbours, needs " + std::to_string(k),
                  {v});
    }
    in_d[v] = 1;
    grown.push_back(v);
    result.promoted_deficient.push_back(v);
  }
  result.dominating_set = normalized(std::move(grown));
  return result;
}

}  // namespace plutus
