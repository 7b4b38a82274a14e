#pragma once

#include <cstdint>
#include <vector>

#include "plutus/graph.hpp"

namespace plutus {

struct Point {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point&, const Point&) = default;
};

// Unit-disk instance: vertex i sits at points[i]; u ~ v iff the closed disk
// of the given radius around u contains v.
struct UdgInstance {
  std::vector<Point> points;
  double radius = 1.0;

  Graph graph() const;
};

// Edge test is dx*dx + dy*dy <= radius*radius in IEEE double, so a pair at
// exactly `radius` is adjacent. Throws NonFiniteCoordinate / InvalidArgument.
Graph from_points(const std::vector<Point>& points, double radius);

// SplitMix64 (Steele, Lea, Flood 2014). State advances by the golden-gamma
// constant 0x9e3779b97f4a7c15 per draw and each output is the finalizer of
// the new state, so draw i depends only on (seed, i).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Top 53 bits scaled into [0, 1).
  double next_unit() noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

// n points uniform in [0,1)^2: point i takes draws 2i (x) and 2i+1 (y) of
// SplitMix64(seed).
UdgInstance random_geometric(int n, double radius, std::uint64_t seed);

}  // namespace plutus
