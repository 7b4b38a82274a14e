#include <doctest.h>

#include <cmath>
#include <cstring>

#include "naive.hpp"
#include "plutus/geometry.hpp"
#include "plutus/graph.hpp"
#include "plutus/traversal.hpp"

using namespace plutus;
using namespace plutus::testing;

namespace {

bool symmetric_simple(const Graph& g) {
  for (Vertex u = 0; u < g.node_count(); ++u) {
    const auto nbrs = g.neighbors(u);
    if (!std::is_sorted(nbrs.begin(), nbrs.end())) return false;
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) return false;
    for (Vertex v : nbrs) {
      if (v == u || !g.has_edge(v, u)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_SUITE("graph-core/construction") {
  TEST_CASE("from_edge_list builds P3") {
    const std::vector<Edge> edges{{0, 1}, {1, 2}};
    const Graph g = Graph::from_edge_list(3, edges);
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(1, 0));
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK(g.degree(1) == 2);
  }

  TEST_CASE("single isolated node") {
    const Graph g = Graph::from_edge_list(1, {});
    CHECK(g.node_count() == 1);
    CHECK(g.edge_count() == 0);
  }

  TEST_CASE("duplicates and reversed edges collapse") {
    const std::vector<Edge> edges{{0, 1}, {1, 0}, {0, 1}, {2, 1}};
    const Graph g = Graph::from_edge_list(3, edges);
    CHECK(g.edge_count() == 2);
    CHECK(symmetric_simple(g));
  }

  TEST_CASE("self-loop and out-of-range are rejected") {
    const std::vector<Edge> loop{{0, 0}};
    try {
      Graph::from_edge_list(3, loop);
      FAIL("expected SelfLoop");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::SelfLoop);
    }
    const std::vector<Edge> far{{0, 3}};
    CHECK_THROWS_AS(Graph::from_edge_list(3, far), Error);
    const std::vector<Edge> negative{{-1, 0}};
    CHECK_THROWS_AS(Graph::from_edge_list(3, negative), Error);
  }

  TEST_CASE("random graphs are symmetric and simple") {
    for (std::uint32_t seed = 0; seed < 20; ++seed) {
      CHECK(symmetric_simple(random_graph(25, 0.2, seed)));
    }
  }
}

TEST_SUITE("graph-core/udg") {
  TEST_CASE("distance exactly radius is an edge") {
    const Graph g = from_points({{0, 0}, {1, 0}}, 1.0);
    CHECK(g.has_edge(0, 1));
  }

  TEST_CASE("distance beyond radius is not") {
    const Graph g = from_points({{0, 0}, {1.01, 0}}, 1.0);
    CHECK(g.edge_count() == 0);
  }

  TEST_CASE("collinear points form P3") {
    const Graph g = from_points({{0, 0}, {1, 0}, {2, 0}}, 1.0);
    CHECK(g == path_graph(3));
  }

  TEST_CASE("non-finite coordinates and bad radius rejected") {
    CHECK_THROWS_AS(from_points({{0, 0}, {NAN, 0}}, 1.0), Error);
    CHECK_THROWS_AS(from_points({{0, 0}, {INFINITY, 0}}, 1.0), Error);
    CHECK_THROWS_AS(from_points({{0, 0}}, 0.0), Error);
  }

  TEST_CASE("random_geometric is bit-for-bit reproducible") {
    const UdgInstance a = random_geometric(50, 0.3, 7);
    const UdgInstance b = random_geometric(50, 0.3, 7);
    REQUIRE(a.points.size() == 50);
    CHECK(std::memcmp(a.points.data(), b.points.data(), sizeof(Point) * 50) == 0);
    CHECK(a.graph().edges() == b.graph().edges());
    CHECK(random_geometric(50, 0.3, 8).points != a.points);
    for (const Point& p : a.points) {
      CHECK(p.x >= 0.0);
      CHECK(p.x < 1.0);
      CHECK(p.y >= 0.0);
      CHECK(p.y < 1.0);
    }
  }

  TEST_CASE("SplitMix64 reference outputs") {
    // Published reference sequence for seed 1234567.
    SplitMix64 rng(1234567);
    CHECK(rng.next() == 6457827717110365317ULL);
    CHECK(rng.next() == 3203168211198807973ULL);
    CHECK(rng.next() == 9817491932198370423ULL);
  }

  TEST_CASE("single point instance") {
    const Graph g = random_geometric(1, 0.3, 0).graph();
    CHECK(g.node_count() == 1);
    CHECK(g.edge_count() == 0);
  }

  TEST_CASE("radius above sqrt(2) gives the complete graph") {
    const Graph g = random_geometric(50, 1.5, 7).graph();
    CHECK(g.edge_count() == 1225);
  }
}

TEST_SUITE("graph-core/traversal") {
  TEST_CASE("hop distances") {
    CHECK(hop_distance(path_graph(3), 0, 2) == 2);
    CHECK(hop_distance(cycle_graph(6), 0, 3) == 3);
    CHECK(hop_distance(cycle_graph(6), 4, 4) == 0);
    const Graph split = Graph::from_edge_list(3, std::vector<Edge>{{0, 1}});
    CHECK_FALSE(hop_distance(split, 0, 2).has_value());
  }

  TEST_CASE("triangle inequality on random connected graphs") {
    for (std::uint32_t seed = 0; seed < 10; ++seed) {
      const Graph g = random_graph(20, 0.25, seed);
      if (!naive_connected(g, g.vertices())) continue;
      std::vector<std::vector<int>> d;
      for (Vertex v = 0; v < g.node_count(); ++v) d.push_back(bfs_distances(g, v));
      for (int u = 0; u < 20; ++u) {
        for (int v = 0; v < 20; ++v) {
          CHECK(d[u][v] == d[v][u]);
          for (int w = 0; w < 20; ++w) CHECK(d[u][w] <= d[u][v] + d[v][w]);
        }
      }
    }
  }

  TEST_CASE("constrained shortest path on C4") {
    const Graph c4 = cycle_graph(4);
    const VertexMask in_d = make_mask(4, VertexSet{0, 1, 2});
    PathConstraints outside_d;
    outside_d.internal_allowed = [&](Vertex w) { return !in_d[w]; };
    const auto path = shortest_path(c4, 0, 2, outside_d);
    REQUIRE(path.has_value());
    CHECK(*path == std::vector<Vertex>{0, 3, 2});
  }

  TEST_CASE("forbidden middle leaves no path") {
    PathConstraints c;
    c.forbidden = {1};
    CHECK_FALSE(shortest_path(path_graph(3), 0, 2, c).has_value());
  }

  TEST_CASE("adjacent endpoints give a bare edge") {
    CHECK(*shortest_path(path_graph(3), 1, 2) == std::vector<Vertex>{1, 2});
  }

  TEST_CASE("ties break toward the lexicographically smallest sequence") {
    // 0 reaches 5 through {1,2} x {3,4}.
    const std::vector<Edge> edges{{0, 2}, {0, 1}, {1, 4}, {1, 3}, {2, 3}, {3, 5}, {4, 5}};
    const Graph g = Graph::from_edge_list(6, edges);
    CHECK(*shortest_path(g, 0, 5) == std::vector<Vertex>{0, 1, 3, 5});
    CHECK(*shortest_path(g, 5, 0) == std::vector<Vertex>{5, 3, 1, 0});
  }

  TEST_CASE("shortest_path length matches BFS") {
    for (std::uint32_t seed = 0; seed < 10; ++seed) {
      const Graph g = random_graph(18, 0.2, seed + 100);
      for (Vertex u = 0; u < 18; ++u) {
        const auto d = bfs_distances(g, u);
        for (Vertex v = 0; v < 18; ++v) {
          const auto p = shortest_path(g, u, v);
          if (d[v] == kUnreachable) {
            CHECK_FALSE(p.has_value());
            continue;
          }
          REQUIRE(p.has_value());
          CHECK(static_cast<int>(p->size()) == d[v] + 1);
          for (std::size_t i = 0; i + 1 < p->size(); ++i) CHECK(g.has_edge((*p)[i], (*p)[i + 1]));
        }
      }
    }
  }

  TEST_CASE("components ordered by smallest member") {
    const Graph g = Graph::from_edge_list(5, std::vector<Edge>{{3, 4}, {0, 2}});
    const auto comps = connected_components(g, g.vertices());
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == VertexSet{0, 2});
    CHECK(comps[1] == VertexSet{1});
    CHECK(comps[2] == VertexSet{3, 4});
  }
}
