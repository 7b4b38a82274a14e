#include "plutus/pipeline.hpp"

#include <algorithm>
#include <stdexcept>

#include "plutus/connectivity.hpp"
#include "plutus/traversal.hpp"

namespace plutus {

namespace {

void transition(std::vector<Role>& roles, Vertex v, Role to) {
  const Role from = roles[v];
  const bool ok = (from == Role::DominationProne && to != Role::DominationProne) ||
                  (from == Role::DominationReluctant && to == Role::Dominator);
  if (!ok) {
    throw std::logic_error("illegal role transition " + std::string(to_string(from)) + " -> " +
                           std::string(to_string(to)) + " at node " + std::to_string(v));
  }
  roles[v] = to;
}

// Appends a phase whose output is `next` and promotes the nodes it added.
void record(PlutusResult& result, std::string name, const VertexSet& next) {
  const VertexSet& before = result.dominating_set;
  if (!std::includes(next.begin(), next.end(), before.begin(), before.end())) {
    throw std::logic_error("phase " + name + " dropped a dominator");
  }
  VertexSet added;
  std::set_difference(next.begin(), next.end(), before.begin(), before.end(),
                      std::back_inserter(added));
  for (Vertex v : added) transition(result.roles, v, Role::Dominator);
  result.dominating_set = next;
  result.phase_trace.push_back({std::move(name), next.size(), std::move(added)});
}

}  // namespace

PlutusResult run_plutus(const Graph& g, const PlutusConfig& config,
                        const PhaseObserver& observer) {
  if (config.k < 1) throw Error(ErrorKind::InvalidArgument, "k must be positive");
  if (config.m < 1 || config.m > 3) throw Error(ErrorKind::InvalidArgument, "m must be 1, 2 or 3");
  if (g.node_count() == 0) throw Error(ErrorKind::EmptyGraph, "graph has no nodes");

  const VertexSet all = g.vertices();
  if (auto sep = find_separation(g, all, config.m)) {
    if (config.m == 1) {
      throw Error(ErrorKind::DisconnectedInput, "graph is not connected");
    }
    throw Error(ErrorKind::GraphNotMConnected,
                "graph is not " + std::to_string(config.m) + "-connected", sep->removed);
  }

  using Clock = std::chrono::steady_clock;
  PlutusResult result;
  result.roles.assign(g.node_count(), Role::DominationProne);
  auto started = Clock::now();
  auto finish = [&](std::string name, const VertexSet& next) {
    record(result, std::move(name), next);
    const auto now = Clock::now();
    if (observer) observer(result.phase_trace.back(), now - started);
    started = now;
  };

  const IsolationResult isolated = isolation(g);
  finish("isolation", isolated.mis);
  for (Vertex v = 0; v < g.node_count(); ++v) {
    if (result.roles[v] == Role::DominationProne) {
      transition(result.roles, v, Role::DominationReluctant);
    }
  }

  finish("domination", domination(g, result.dominating_set));

  SynergyResult layered =
      synergy(g, result.dominating_set, isolated.mis, config.k, config.synergy_mode);
  result.layers = std::move(layered.layers);
  finish("synergy", layered.dominating_set);

  if (config.m >= 2) {
    finish("diversification",
           diversification(g, result.dominating_set, config.max_augmentation_iterations));
  }
  if (config.m == 3) {
    finish("sustainability",
           sustainability(g, result.dominating_set, config.max_augmentation_iterations));
  }
  return result;
}

}  // namespace plutus
