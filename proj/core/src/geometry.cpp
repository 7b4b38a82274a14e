#include "plutus/geometry.hpp"

#include <cmath>
#include <string>

namespace plutus {

Graph UdgInstance::graph() const { return from_points(points, radius); }

Graph from_points(const std::vector<Point>& points, double radius) {
  if (!std::isfinite(radius) || radius <= 0.0) {
    throw Error(ErrorKind::InvalidArgument, "radius must be positive and finite");
  }
  const int n = static_cast<int>(points.size());
  for (int i = 0; i < n; ++i) {
    if (!std::isfinite(points[i].x) || !std::isfinite(points[i].y)) {
      throw Error(ErrorKind::NonFiniteCoordinate,
                  "point " + std::to_string(i) + " has a non-finite coordinate", {i});
    }
  }
  const double limit = radius * radius;
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const double dx = points[u].x - points[v].x;
      const double dy = points[u].y - points[v].y;
      if (dx * dx + dy * dy <= limit) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edge_list(n, edges);
}

UdgInstance random_geometric(int n, double radius, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be at least 1");
  if (!std::isfinite(radius) || radius <= 0.0) {
    throw Error(ErrorKind::InvalidArgument, "radius must be positive and finite");
  }
  SplitMix64 rng(seed);
  UdgInstance instance;
  instance.radius = radius;
  instance.points.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double x = rng.next_unit();
    const double y = rng.next_unit();
    instance.points.push_back({x, y});
  }
  return instance;
}

}  // namespace plutus
