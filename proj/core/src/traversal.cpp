#include "plutus/traversal.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace plutus {

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(g.node_count(), kUnreachable);
  std::queue<Vertex> frontier;
  dist[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const Vertex x = frontier.front();
    frontier.pop();
    for (Vertex y : g.neighbors(x)) {
      if (dist[y] == kUnreachable) {
        dist[y] = dist[x] + 1;
        frontier.push(y);
      }
    }
  }
  return dist;
}

std::optional<int> hop_distance(const Graph& g, Vertex u, Vertex v) {
  if (!g.contains(u) || !g.contains(v)) {
    throw Error(ErrorKind::VertexOutOfRange, "hop_distance endpoint out of range");
  }
  if (u == v) return 0;
  const int d = bfs_distances(g, u)[v];
  if (d == kUnreachable) return std::nullopt;
  return d;
}

std::optional<std::vector<Vertex>> shortest_bridge(const Graph& g,
                                                   std::span<const Vertex> sources,
                                                   std::span<const Vertex> targets,
                                                   const VertexPredicate& internal_allowed) {
  const int n = g.node_count();
  const VertexMask is_target = make_mask(n, targets);
  const VertexMask is_source = make_mask(n, sources);
  auto allowed = [&](Vertex w) {
    return !is_target[w] && !is_source[w] && (!internal_allowed || internal_allowed(w));
  };

  // dist[w]: hops from an allowed vertex w to the nearest target, stepping
  // only through allowed vertices.
  std::vector<int> dist(n, kUnreachable);
  std::queue<Vertex> frontier;
  for (Vertex t : targets) {
    for (Vertex w : g.neighbors(t)) {
      if (dist[w] == kUnreachable && allowed(w)) {
        dist[w] = 1;
        frontier.push(w);
      }
    }
  }
  while (!frontier.empty()) {
    const Vertex x = frontier.front();
    frontier.pop();
    for (Vertex y : g.neighbors(x)) {
      if (dist[y] == kUnreachable && allowed(y)) {
        dist[y] = dist[x] + 1;
        frontier.push(y);
      }
    }
  }

  auto first_hop = [&](Vertex s) {
    int best = std::numeric_limits<int>::max();
    for (Vertex w : g.neighbors(s)) {
      if (dist[w] != kUnreachable) best = std::min(best, dist[w]);
    }
    return best;
  };

  Vertex start = -1;
  int best = std::numeric_limits<int>::max();
  VertexSet ordered_sources(sources.begin(), sources.end());
  std::sort(ordered_sources.begin(), ordered_sources.end());
  for (Vertex s : ordered_sources) {
    const int d = first_hop(s);
    if (d < best) {
      best = d;
      start = s;
    }
  }
  if (start < 0) return std::nullopt;

  std::vector<Vertex> path{start};
  int remaining = best;
  Vertex current = start;
  while (remaining > 0) {
    for (Vertex w : g.neighbors(current)) {
      if (dist[w] == remaining) {
        current = w;
        break;
      }
    }
    path.push_back(current);
    --remaining;
  }
  for (Vertex t : g.neighbors(current)) {
    if (is_target[t]) {
      path.push_back(t);
      break;
    }
  }
  return path;
}

std::optional<std::vector<Vertex>> shortest_path(const Graph& g, Vertex u, Vertex v,
                                                 const PathConstraints& constraints) {
  if (!g.contains(u) || !g.contains(v)) {
    throw Error(ErrorKind::VertexOutOfRange, "shortest_path endpoint out of range");
  }
  const VertexMask forbidden = make_mask(g.node_count(), constraints.forbidden);
  if (forbidden[u] || forbidden[v]) {
    throw Error(ErrorKind::InvalidArgument, "shortest_path endpoint is forbidden");
  }
  if (u == v) return std::vector<Vertex>{u};
  if (g.has_edge(u, v)) return std::vector<Vertex>{u, v};
  const Vertex src[] = {u};
  const Vertex dst[] = {v};
  return shortest_bridge(g, src, dst, [&](Vertex w) {
    return !forbidden[w] && (!constraints.internal_allowed || constraints.internal_allowed(w));
  });
}

std::vector<VertexSet> connected_components(const Graph& g, std::span<const Vertex> subset) {
  const int n = g.node_count();
  const VertexMask in = make_mask(n, subset);
  VertexMask seen(n, 0);
  VertexSet ordered(subset.begin(), subset.end());
  std::sort(ordered.begin(), ordered.end());

  std::vector<VertexSet> components;
  std::vector<Vertex> stack;
  for (Vertex root : ordered) {
    if (seen[root]) continue;
    VertexSet component;
    seen[root] = 1;
    stack.push_back(root);
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      component.push_back(x);
      for (Vertex y : g.neighbors(x)) {
        if (in[y] && !seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

bool is_connected_subset(const Graph& g, std::span<const Vertex> subset) {
  return connected_components(g, subset).size() <= 1;
}

}  // namespace plutus
