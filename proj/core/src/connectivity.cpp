#include "plutus/connectivity.hpp"

#include <algorithm>

#include "plutus/blocks.hpp"
#include "plutus/traversal.hpp"

namespace plutus {

namespace {

VertexSet without(const VertexSet& set, Vertex v) {
  VertexSet out;
  out.reserve(set.size());
  for (Vertex x : set) {
    if (x != v) out.push_back(x);
  }
  return out;
}

// Separation witnessed by removing `removed` from `members`, or nullopt when
// the remainder is connected.
std::optional<Separation> split_after(const Graph& g, const VertexSet& remainder,
                                      VertexSet removed) {
  const auto components = connected_components(g, remainder);
  if (components.size() <= 1) return std::nullopt;
  Separation sep;
  sep.removed = normalized(std::move(removed));
  sep.separated = std::make_pair(components[0].front(), components[1].front());
  return sep;
}

}  // namespace

std::optional<Separation> find_separation(const Graph& g, std::span<const Vertex> subset, int m) {
  if (m < 1 || m > 3) {
    throw Error(ErrorKind::InvalidArgument, "m-connectivity is supported for m in 1..3");
  }
  const VertexSet members = normalized(VertexSet(subset.begin(), subset.end()));
  if (members.empty()) return Separation{{}, std::nullopt, true};

  if (auto sep = split_after(g, members, {})) return sep;
  if (m == 1) return std::nullopt;

  if (members.size() < static_cast<std::size_t>(m) + 1) {
    return Separation{{}, std::nullopt, true};
  }

  for (Vertex v : members) {
    const VertexSet rest = without(members, v);
    if (auto sep = split_after(g, rest, {v})) return sep;
    if (m == 2) continue;
    const BlockCutTree tree = block_cut_tree(g, rest);
    if (tree.cut_vertices.empty()) continue;
    const Vertex w = tree.cut_vertices.front();
    return split_after(g, without(rest, w), {v, w});
  }
  return std::nullopt;
}

bool is_m_connected(const Graph& g, std::span<const Vertex> subset, int m) {
  return !find_separation(g, subset, m).has_value();
}

}  // namespace plutus
