#include <algorithm>

#include "plutus/pipeline.hpp"
#include "plutus/traversal.hpp"

namespace plutus {

std::string_view to_string(Role role) {
  switch (role) {
    case Role::Dominator: return "dominator";
    case Role::DominationReluctant: return "reluctant";
    case Role::DominationProne: return "prone";
  }
  return "unknown";
}

VertexSet isolate_within(const Graph& g, std::span<const Vertex> component) {
  const int n = g.node_count();
  const VertexSet members = normalized(VertexSet(component.begin(), component.end()));
  if (members.empty()) return {};
  const VertexMask in = make_mask(n, members);

  std::vector<Role> role(n, Role::DominationProne);
  std::vector<int> reluctant_neighbors(n, 0);
  std::size_t prone_left = members.size();
  VertexSet chosen;

  auto make_dominator = [&](Vertex v) {
    role[v] = Role::Dominator;
    --prone_left;
    chosen.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      if (!in[w] || role[w] != Role::DominationProne) continue;
      role[w] = Role::DominationReluctant;
      --prone_left;
      for (Vertex x : g.neighbors(w)) {
        if (in[x]) ++reluctant_neighbors[x];
      }
    }
  };

  auto local_degree = [&](Vertex v) {
    return std::count_if(g.neighbors(v).begin(), g.neighbors(v).end(),
                         [&](Vertex w) { return in[w] != 0; });
  };

  // Fallacy: highest degree first.
  Vertex seed = members.front();
  auto seed_degree = local_degree(seed);
  for (Vertex v : members) {
    const auto d = local_degree(v);
    if (d > seed_degree) {
      seed = v;
      seed_degree = d;
    }
  }
  make_dominator(seed);

  // Separation: the Prone vertex with the most Reluctant neighbours.
  while (prone_left > 0) {
    Vertex best = -1;
    for (Vertex v : members) {
      if (role[v] != Role::DominationProne) continue;
      if (best < 0 || reluctant_neighbors[v] > reluctant_neighbors[best]) best = v;
    }
    make_dominator(best);
  }
  return normalized(std::move(chosen));
}

IsolationResult isolation(const Graph& g) {
  if (g.node_count() == 0) throw Error(ErrorKind::EmptyGraph, "isolation needs at least one node");
  const VertexSet all = g.vertices();
  if (!is_connected_subset(g, all)) {
    throw Error(ErrorKind::DisconnectedInput, "isolation needs a connected graph");
  }
  IsolationResult result;
  result.mis = isolate_within(g, all);
  result.roles.assign(g.node_count(), Role::DominationReluctant);
  for (Vertex v : result.mis) result.roles[v] = Role::Dominator;
  return result;
}

}  // namespace plutus
