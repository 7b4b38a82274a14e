#include "plutus/verification.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "plutus/connectivity.hpp"
#include "plutus/traversal.hpp"

namespace plutus {

std::string_view to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::AdjacentPair: return "adjacent_pair";
    case WitnessKind::AddableVertex: return "addable_vertex";
    case WitnessKind::Undominated: return "undominated";
    case WitnessKind::Disconnected: return "disconnected";
    case WitnessKind::Deficient: return "deficient";
    case WitnessKind::Separator: return "separator";
    case WitnessKind::TooSmall: return "too_small";
  }
  return "unknown";
}

void VerificationReport::add(Check check) {
  overall = overall && check.pass;
  checks.push_back(std::move(check));
}

namespace {

Check failed(std::string name, Witness witness) {
  return Check{std::move(name), false, std::move(witness)};
}

std::optional<Witness> disconnection(const Graph& g, const VertexSet& s) {
  const auto components = connected_components(g, s);
  if (components.size() <= 1) return std::nullopt;
  const auto pair = std::make_pair(components[0].front(), components[1].front());
  return Witness{WitnessKind::Disconnected, {pair.first, pair.second}, pair, std::nullopt};
}

}  // namespace

Check is_maximal_independent_set(const Graph& g, const VertexSet& s) {
  const std::string name = "maximal_independent_set";
  const VertexMask in = make_mask(g.node_count(), s);
  for (Vertex u : s) {
    for (Vertex v : g.neighbors(u)) {
      if (u < v && in[v]) return failed(name, {WitnessKind::AdjacentPair, {u, v}});
    }
  }
  for (Vertex v = 0; v < g.node_count(); ++v) {
    if (in[v]) continue;
    const auto nbrs = g.neighbors(v);
    if (std::none_of(nbrs.begin(), nbrs.end(), [&](Vertex w) { return in[w] != 0; })) {
      return failed(name, {WitnessKind::AddableVertex, {v}});
    }
  }
  return Check{name, true, std::nullopt};
}

Check is_connected_dominating_set(const Graph& g, const VertexSet& s) {
  const std::string name = "connected_dominating_set";
  const VertexMask in = make_mask(g.node_count(), s);
  for (Vertex v = 0; v < g.node_count(); ++v) {
    if (in[v]) continue;
    const auto nbrs = g.neighbors(v);
    if (std::none_of(nbrs.begin(), nbrs.end(), [&](Vertex w) { return in[w] != 0; })) {
      return failed(name, {WitnessKind::Undominated, {v}});
    }
  }
  if (auto split = disconnection(g, s)) return failed(name, std::move(*split));
  return Check{name, true, std::nullopt};
}

Check is_k_dominating(const Graph& g, const VertexSet& s, int k) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "k must be positive");
  const std::string name = "k_dominating";
  const VertexMask in = make_mask(g.node_count(), s);
  for (Vertex v = 0; v < g.node_count(); ++v) {
    if (in[v]) continue;
    const auto nbrs = g.neighbors(v);
    const int count =
        static_cast<int>(std::count_if(nbrs.begin(), nbrs.end(), [&](Vertex w) { return in[w] != 0; }));
    if (count < k) return failed(name, {WitnessKind::Deficient, {v}, std::nullopt, count});
  }
  return Check{name, true, std::nullopt};
}

Check m_connectivity_check(const Graph& g, const VertexSet& s, int m) {
  const std::string name = "m_connected";
  const auto sep = find_separation(g, s, m);
  if (!sep) return Check{name, true, std::nullopt};
  if (sep->too_small) return failed(name, {WitnessKind::TooSmall, s});
  if (sep->removed.empty()) {
    const auto pair = *sep->separated;
    return failed(name, {WitnessKind::Disconnected, {pair.first, pair.second}, pair});
  }
  return failed(name, {WitnessKind::Separator, sep->removed, sep->separated});
}

VerificationReport is_m_connected_k_dominating(const Graph& g, const VertexSet& s, int k, int m) {
  VerificationReport report;
  report.add(is_k_dominating(g, s, k));
  report.add(m_connectivity_check(g, s, m));
  return report;
}

StretchReport backbone_stretch(const Graph& g, const VertexSet& s) {
  const int n = g.node_count();
  const VertexMask in = make_mask(n, s);
  StretchReport report;
  std::vector<int> routed(n);
  for (Vertex u = 0; u < n; ++u) {
    const std::vector<int> direct = bfs_distances(g, u);

    // Paths may leave u freely but only continue through members of s.
    std::fill(routed.begin(), routed.end(), kUnreachable);
    std::queue<Vertex> frontier;
    routed[u] = 0;
    frontier.push(u);
    while (!frontier.empty()) {
      const Vertex x = frontier.front();
      frontier.pop();
      if (x != u && !in[x]) continue;
      for (Vertex y : g.neighbors(x)) {
        if (routed[y] == kUnreachable) {
          routed[y] = routed[x] + 1;
          frontier.push(y);
        }
      }
    }

    for (Vertex v = u + 1; v < n; ++v) {
      if (direct[v] == kUnreachable) continue;
      ++report.pairs;
      const double ratio = routed[v] == kUnreachable
                               ? std::numeric_limits<double>::infinity()
                               : static_cast<double>(routed[v]) / direct[v];
      if (!report.worst_pair || ratio > report.max_stretch) {
        report.max_stretch = ratio;
        report.worst_pair = std::make_pair(u, v);
      }
    }
  }
  return report;
}

}  // namespace plutus
