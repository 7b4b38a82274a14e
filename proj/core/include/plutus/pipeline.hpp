#pragma once

#include <chrono>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "plutus/graph.hpp"

namespace plutus {

// Per-node state. Transitions only move away from Prone and toward
// Dominator: Prone->Dominator, Prone->Reluctant, Reluctant->Dominator.
enum class Role { Dominator, DominationReluctant, DominationProne };

std::string_view to_string(Role role);

enum class SynergyMode {
  BestEffort,  // deficient nodes are promoted into D
  Strict,      // deficient nodes raise InfeasibleKDominance
};

struct PlutusConfig {
  int k = 1;  // domination multiplicity
  int m = 1;  // connectivity target, 1..3
  // Cap on augmentation rounds in each of diversification and
  // sustainability; 0 selects 10 * node_count.
  int max_augmentation_iterations = 0;
  SynergyMode synergy_mode = SynergyMode::BestEffort;
};

struct PhaseRecord {
  std::string name;
  std::size_t size = 0;  // |D| after the phase
  VertexSet added;

  friend bool operator==(const PhaseRecord&, const PhaseRecord&) = default;
};

struct PlutusResult {
  VertexSet dominating_set;
  std::vector<PhaseRecord> phase_trace;
  std::vector<Role> roles;
  // Independent-set layers M1..Mi found by isolation and synergy.
  std::vector<VertexSet> layers;

  friend bool operator==(const PlutusResult&, const PlutusResult&) = default;
};

struct IsolationResult {
  VertexSet mis;
  std::vector<Role> roles;
};

// Greedy maximal independent set. The highest-degree vertex (lowest id on
// ties) seeds the set; afterwards the Prone vertex with the most Reluctant
// neighbours joins until no Prone vertex is left. Throws EmptyGraph /
// DisconnectedInput.
IsolationResult isolation(const Graph& g);

// Same procedure restricted to the subgraph induced by `component`, which
// must be connected. Degrees and neighbour counts are taken inside it.
VertexSet isolate_within(const Graph& g, std::span<const Vertex> component);

// Connects the independent set through shortest paths between members at
// most 3 hops apart, processed by (distance, smaller id, larger id) and
// skipped when the pair is already joined through D.
VertexSet domination(const Graph& g, const VertexSet& mis);

struct SynergyResult {
  VertexSet dominating_set;
  std::vector<VertexSet> layers;  // M1 (input) followed by M2..Mk
  VertexSet promoted_deficient;   // best-effort promotions, usually empty
};

// Adds layers M2..Mk, each a maximal independent set of the graph left after
// removing the earlier layers (computed per connected component).
SynergyResult synergy(const Graph& g, const VertexSet& d, const VertexSet& first_layer, int k,
                      SynergyMode mode = SynergyMode::BestEffort);

// Repeatedly bridges the smallest leaf block of induced(D) to the rest of D
// with a shortest path whose internal vertices lie outside D, until D is
// 2-connected. Throws Infeasible2Connectivity / IterationCapExceeded.
VertexSet diversification(const Graph& g, const VertexSet& d, int max_iterations = 0);

// Promotes vertices until no bad point remains, a bad point being v in D
// with induced(D - v) not 2-connected. Throws Infeasible3Connectivity /
// IterationCapExceeded.
VertexSet sustainability(const Graph& g, const VertexSet& d, int max_iterations = 0);

// Called after each phase with its record and wall time.
using PhaseObserver = std::function<void(const PhaseRecord&, std::chrono::nanoseconds)>;

// Isolation, domination, synergy(k), then diversification when m >= 2 and
// sustainability when m == 3. Throws GraphNotMConnected when g itself is not
// m-connected.
PlutusResult run_plutus(const Graph& g, const PlutusConfig& config,
                        const PhaseObserver& observer = {});

}  // namespace plutus
