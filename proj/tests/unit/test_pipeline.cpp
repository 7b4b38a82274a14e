#include <doctest.h>

#include "naive.hpp"
#include "plutus/geometry.hpp"
#include "plutus/pipeline.hpp"
#include "plutus/traversal.hpp"

using namespace plutus;
using namespace plutus::testing;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected plutus::Error");
  return ErrorKind::Parse;
}

// Connected unit-disk graphs, small enough for the naive checks.
std::vector<Graph> udg_corpus(int count, int n, double radius, std::uint64_t first_seed) {
  std::vector<Graph> out;
  for (std::uint64_t seed = first_seed; static_cast<int>(out.size()) < count; ++seed) {
    Graph g = random_geometric(n, radius, seed).graph();
    if (naive_connected(g, g.vertices())) out.push_back(std::move(g));
  }
  return out;
}

bool independent(const Graph& g, const VertexSet& s) {
  for (Vertex u : s) {
    for (Vertex v : s) {
      if (g.has_edge(u, v)) return false;
    }
  }
  return true;
}

bool maximal_in(const Graph& g, const VertexSet& s, const VertexSet& within) {
  for (Vertex v : within) {
    if (std::binary_search(s.begin(), s.end(), v)) continue;
    bool covered = false;
    for (Vertex w : g.neighbors(v)) covered = covered || std::binary_search(s.begin(), s.end(), w);
    if (!covered) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("pipeline/isolation") {
  TEST_CASE("hand-traced examples") {
    CHECK(isolation(path_graph(3)).mis == VertexSet{1});
    CHECK(isolation(complete_graph(1)).mis == VertexSet{0});
    CHECK(isolation(cycle_graph(6)).mis == VertexSet{0, 2, 4});
    CHECK(isolation(complete_graph(4)).mis == VertexSet{0});
  }

  TEST_CASE("roles after isolation") {
    const IsolationResult r = isolation(path_graph(3));
    CHECK(r.roles == std::vector<Role>{Role::DominationReluctant, Role::Dominator,
                                       Role::DominationReluctant});
  }

  TEST_CASE("most reluctant neighbours wins over id order") {
    // 0 and 5 tie on degree 4, so 0 seeds and 1,2,3,6 turn reluctant.
    // Prone 4 then sees one reluctant neighbour, prone 5 sees three.
    const std::vector<Edge> edges{{0, 1}, {0, 2}, {0, 3}, {0, 6}, {1, 4},
                                  {4, 5}, {1, 5}, {2, 5}, {3, 5}};
    CHECK(isolation(Graph::from_edge_list(7, edges)).mis == VertexSet{0, 5});
  }

  TEST_CASE("errors") {
    CHECK(kind_of([] { isolation(Graph{}); }) == ErrorKind::EmptyGraph);
    const Graph split = Graph::from_edge_list(3, std::vector<Edge>{{0, 1}});
    CHECK(kind_of([&] { isolation(split); }) == ErrorKind::DisconnectedInput);
  }

  TEST_CASE("output is a maximal independent set") {
    for (const Graph& g : udg_corpus(40, 40, 0.3, 1)) {
      const VertexSet mis = isolation(g).mis;
      CHECK(independent(g, mis));
      CHECK(maximal_in(g, mis, g.vertices()));
    }
  }
}

TEST_SUITE("pipeline/domination") {
  TEST_CASE("hand-traced examples") {
    CHECK(domination(path_graph(5), VertexSet{1, 3}) == VertexSet{1, 2, 3});
    CHECK(domination(star_graph(4), VertexSet{0}) == VertexSet{0});
    // Pairs in (distance, u, v) order: (0,2) adds 1, (0,4) adds 5, (2,4) is
    // already joined through 0.
    CHECK(domination(cycle_graph(6), VertexSet{0, 2, 4}) == VertexSet{0, 1, 2, 4, 5});
  }

  TEST_CASE("distance-3 pairs are bridged") {
    // P7 with MIS {0, 3, 6}: pairs at distance 3 promote {1,2} and {4,5}.
    CHECK(domination(path_graph(7), VertexSet{0, 3, 6}) == VertexSet{0, 1, 2, 3, 4, 5, 6});
  }

  TEST_CASE("output is a connected dominating set") {
    for (const Graph& g : udg_corpus(40, 40, 0.3, 100)) {
      const VertexSet mis = isolation(g).mis;
      const VertexSet d = domination(g, mis);
      CHECK(std::includes(d.begin(), d.end(), mis.begin(), mis.end()));
      CHECK(naive_connected(g, d));
      CHECK(naive_k_dominating(g, d, 1));
    }
  }
}

TEST_SUITE("pipeline/synergy") {
  TEST_CASE("k = 1 leaves D unchanged") {
    const SynergyResult r = synergy(cycle_graph(6), {0, 1, 2, 3, 4}, {0, 2, 4}, 1);
    CHECK(r.dominating_set == VertexSet{0, 1, 2, 3, 4});
    CHECK(r.layers.size() == 1);
  }

  TEST_CASE("K5 second layer") {
    const SynergyResult r = synergy(complete_graph(5), {0}, {0}, 2);
    CHECK(r.dominating_set == VertexSet{0, 1});
    CHECK(r.layers == std::vector<VertexSet>{{0}, {1}});
  }

  TEST_CASE("C6 second layer absorbs the rest") {
    const SynergyResult r = synergy(cycle_graph(6), {0, 1, 2, 3, 4}, {0, 2, 4}, 2);
    CHECK(r.layers[1] == VertexSet{1, 3, 5});
    CHECK(r.dominating_set == VertexSet{0, 1, 2, 3, 4, 5});
  }

  TEST_CASE("residual exhausted before k stops early") {
    const SynergyResult r = synergy(path_graph(3), {1}, {1}, 5);
    CHECK(r.layers.size() == 2);
    CHECK(r.dominating_set == VertexSet{0, 1, 2});
  }

  TEST_CASE("strict mode reports the deficient node; best effort promotes it") {
    // Inconsistent input: the first layer {0,2} is not inside D = {1}.
    CHECK(kind_of([] { synergy(path_graph(3), {1}, {0, 2}, 2, SynergyMode::Strict); }) ==
          ErrorKind::InfeasibleKDominance);
    try {
      synergy(path_graph(3), {1}, {0, 2}, 2, SynergyMode::Strict);
    } catch (const Error& e) {
      CHECK(e.witness() == VertexSet{0});
    }
    const SynergyResult r = synergy(path_graph(3), {1}, {0, 2}, 2);
    CHECK(r.promoted_deficient == VertexSet{0, 2});
    CHECK(r.dominating_set == VertexSet{0, 1, 2});
  }

  TEST_CASE("layers are disjoint maximal independent sets of their residuals") {
    for (int k = 1; k <= 3; ++k) {
      for (const Graph& g : udg_corpus(25, 35, 0.35, 200 + k)) {
        const VertexSet mis = isolation(g).mis;
        const SynergyResult r = synergy(g, domination(g, mis), mis, k, SynergyMode::Strict);
        CHECK(naive_k_dominating(g, r.dominating_set, k));
        VertexSet removed;
        for (const VertexSet& layer : r.layers) {
          VertexSet residual;
          for (Vertex v = 0; v < g.node_count(); ++v) {
            if (!std::binary_search(removed.begin(), removed.end(), v)) residual.push_back(v);
          }
          CHECK(independent(g, layer));
          CHECK(maximal_in(g, layer, residual));
          VertexSet overlap;
          std::set_intersection(layer.begin(), layer.end(), removed.begin(), removed.end(),
                                std::back_inserter(overlap));
          CHECK(overlap.empty());
          removed = normalized([&] {
            auto all = removed;
            all.insert(all.end(), layer.begin(), layer.end());
            return all;
          }());
        }
      }
    }
  }
}

TEST_SUITE("pipeline/diversification") {
  TEST_CASE("hand-traced examples") {
    CHECK(diversification(cycle_graph(4), {0, 1, 2}) == VertexSet{0, 1, 2, 3});
    CHECK(diversification(complete_graph(3), {0, 1, 2}) == VertexSet{0, 1, 2});
    CHECK(diversification(complete_graph(4), {0, 1}) == VertexSet{0, 1, 2});
    CHECK(diversification(complete_graph(4), {3}) == VertexSet{0, 1, 3});
  }

  TEST_CASE("pair without a common neighbour closes a longer cycle") {
    CHECK(diversification(cycle_graph(5), {0, 1}) == VertexSet{0, 1, 2, 3, 4});
  }

  TEST_CASE("infeasible when no ear exists") {
    CHECK(kind_of([] { diversification(path_graph(3), {0, 1}); }) ==
          ErrorKind::Infeasible2Connectivity);
    const std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}, {2, 3}};
    try {
      diversification(Graph::from_edge_list(4, edges), {0, 1, 2, 3});
      FAIL("expected Infeasible2Connectivity");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Infeasible2Connectivity);
      CHECK(e.witness() == VertexSet{0, 1, 2});
    }
  }

  TEST_CASE("iteration cap") {
    CHECK(kind_of([] { diversification(complete_graph(4), {0}, 1); }) ==
          ErrorKind::IterationCapExceeded);
  }

  TEST_CASE("2-connected and k-dominance preserved on 2-connected UDGs") {
    int tested = 0;
    for (const Graph& g : udg_corpus(60, 30, 0.4, 300)) {
      if (!naive_m_connected(g, g.vertices(), 2)) continue;
      ++tested;
      const VertexSet mis = isolation(g).mis;
      const VertexSet d2 = synergy(g, domination(g, mis), mis, 2).dominating_set;
      const VertexSet d = diversification(g, d2);
      CHECK(std::includes(d.begin(), d.end(), d2.begin(), d2.end()));
      CHECK(naive_m_connected(g, d, 2));
      CHECK(naive_k_dominating(g, d, 2));
    }
    CHECK(tested >= 20);
  }
}

TEST_SUITE("pipeline/sustainability") {
  TEST_CASE("hand-traced examples") {
    CHECK(sustainability(complete_graph(4), {0, 1, 2}) == VertexSet{0, 1, 2, 3});
    CHECK(sustainability(complete_graph(5), {0, 1, 2, 3, 4}) == VertexSet{0, 1, 2, 3, 4});
    const Graph wheel = wheel_graph(5);
    CHECK(sustainability(wheel, wheel.vertices()) == wheel.vertices());
  }

  TEST_CASE("cycle cannot be made 3-connected") {
    try {
      sustainability(cycle_graph(5), cycle_graph(5).vertices());
      FAIL("expected Infeasible3Connectivity");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Infeasible3Connectivity);
      CHECK(e.witness() == VertexSet{0});
    }
  }

  TEST_CASE("requires a 2-connected backbone") {
    CHECK(kind_of([] { sustainability(path_graph(3), {0, 1, 2}); }) == ErrorKind::InvalidArgument);
  }

  TEST_CASE("3-connected output on 3-connected UDGs") {
    int tested = 0;
    for (const Graph& g : udg_corpus(60, 25, 0.5, 400)) {
      if (!naive_m_connected(g, g.vertices(), 3)) continue;
      ++tested;
      const VertexSet mis = isolation(g).mis;
      const VertexSet d2 = diversification(g, synergy(g, domination(g, mis), mis, 2).dominating_set);
      const VertexSet d3 = sustainability(g, d2);
      CHECK(std::includes(d3.begin(), d3.end(), d2.begin(), d2.end()));
      CHECK(naive_m_connected(g, d3, 3));
      CHECK(menger_m_connected(g, d3, 3));
      CHECK(naive_k_dominating(g, d3, 2));
    }
    CHECK(tested >= 20);
  }
}

TEST_SUITE("pipeline/run_plutus") {
  TEST_CASE("P3 with k=1, m=1") {
    const PlutusResult r = run_plutus(path_graph(3), {1, 1});
    CHECK(r.dominating_set == VertexSet{1});
    REQUIRE(r.phase_trace.size() == 3);
    CHECK(r.phase_trace[0].name == "isolation");
    CHECK(r.phase_trace[1].name == "domination");
    CHECK(r.phase_trace[2].name == "synergy");
    for (const auto& phase : r.phase_trace) CHECK(phase.size == 1);
  }

  TEST_CASE("K4 with k=1, m=3 grows to the whole graph") {
    const PlutusResult r = run_plutus(complete_graph(4), {1, 3});
    CHECK(r.dominating_set == VertexSet{0, 1, 2, 3});
    std::vector<std::size_t> sizes;
    for (const auto& phase : r.phase_trace) sizes.push_back(phase.size);
    CHECK(sizes == std::vector<std::size_t>{1, 1, 1, 3, 4});
    CHECK(r.phase_trace[3].added == VertexSet{1, 2});
    CHECK(r.phase_trace[4].added == VertexSet{3});
  }

  TEST_CASE("preflight rejects graphs below the target connectivity") {
    CHECK(kind_of([] { run_plutus(path_graph(3), {1, 3}); }) == ErrorKind::GraphNotMConnected);
    CHECK(kind_of([] { run_plutus(cycle_graph(6), {1, 3}); }) == ErrorKind::GraphNotMConnected);
    CHECK(kind_of([] { run_plutus(Graph{}, {1, 1}); }) == ErrorKind::EmptyGraph);
    const Graph split = Graph::from_edge_list(4, std::vector<Edge>{{0, 1}, {2, 3}});
    CHECK(kind_of([&] { run_plutus(split, {1, 1}); }) == ErrorKind::DisconnectedInput);
    CHECK(kind_of([] { run_plutus(path_graph(3), {0, 1}); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([] { run_plutus(path_graph(3), {1, 4}); }) == ErrorKind::InvalidArgument);
  }

  TEST_CASE("roles, monotone trace and determinism") {
    for (int m = 1; m <= 3; ++m) {
      for (const Graph& g : udg_corpus(15, 30, 0.45, 500 + m)) {
        if (!naive_m_connected(g, g.vertices(), m)) continue;
        const PlutusConfig cfg{2, m};
        const PlutusResult r = run_plutus(g, cfg);
        CHECK(r == run_plutus(g, cfg));
        std::size_t previous = 0;
        for (const auto& phase : r.phase_trace) {
          CHECK(phase.size >= previous);
          previous = phase.size;
        }
        CHECK(r.phase_trace.back().size == r.dominating_set.size());
        CHECK(r.phase_trace.size() == static_cast<std::size_t>(m == 1 ? 3 : m == 2 ? 4 : 5));
        for (Vertex v = 0; v < g.node_count(); ++v) {
          const bool in_d = std::binary_search(r.dominating_set.begin(), r.dominating_set.end(), v);
          CHECK((r.roles[v] == Role::Dominator) == in_d);
          CHECK(r.roles[v] != Role::DominationProne);
        }
        CHECK(naive_valid(g, r.dominating_set, 2, m));
      }
    }
  }
}
