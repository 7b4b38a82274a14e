#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "plutus/connectivity.hpp"
#include "plutus/geometry.hpp"
#include "plutus/pipeline.hpp"
#include "plutus/verification.hpp"

namespace {

// Radius giving an expected degree of about 20 in the unit square.
double radius_for(int n) { return std::sqrt(20.0 / (std::numbers::pi * n)); }

// First seeded instance that is m-connected.
plutus::Graph instance(int n, int m) {
  for (std::uint64_t seed = 1;; ++seed) {
    plutus::Graph g = plutus::random_geometric(n, radius_for(n), seed).graph();
    if (plutus::is_m_connected(g, g.vertices(), m)) return g;
  }
}

void BM_Generate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(plutus::random_geometric(n, radius_for(n), 7).graph());
  }
}
BENCHMARK(BM_Generate)->Arg(100)->Arg(1000)->Unit(benchmark::kMicrosecond);

void BM_Isolation(benchmark::State& state) {
  const plutus::Graph g = instance(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(plutus::isolation(g));
}
BENCHMARK(BM_Isolation)->Arg(100)->Arg(1000)->Unit(benchmark::kMicrosecond);

void BM_Domination(benchmark::State& state) {
  const plutus::Graph g = instance(static_cast<int>(state.range(0)), 1);
  const plutus::VertexSet mis = plutus::isolation(g).mis;
  for (auto _ : state) benchmark::DoNotOptimize(plutus::domination(g, mis));
}
BENCHMARK(BM_Domination)->Arg(100)->Arg(1000)->Unit(benchmark::kMicrosecond);

void BM_RunPlutus(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  plutus::PlutusConfig config;
  config.k = static_cast<int>(state.range(1));
  config.m = static_cast<int>(state.range(2));
  const plutus::Graph g = instance(n, config.m);
  std::size_t size = 0;
  for (auto _ : state) {
    const plutus::PlutusResult result = plutus::run_plutus(g, config);
    size = result.dominating_set.size();
    benchmark::DoNotOptimize(size);
  }
  state.counters["D"] = static_cast<double>(size);
}
BENCHMARK(BM_RunPlutus)
    ->Args({100, 1, 1})
    ->Args({100, 2, 2})
    ->Args({100, 2, 3})
    ->Args({1000, 1, 1})
    ->Args({1000, 2, 3})
    ->Unit(benchmark::kMillisecond);

void BM_Verify(benchmark::State& state) {
  const plutus::Graph g = instance(static_cast<int>(state.range(0)), 3);
  plutus::PlutusConfig config;
  config.k = 2;
  config.m = 3;
  const plutus::VertexSet d = plutus::run_plutus(g, config).dominating_set;
  for (auto _ : state) benchmark::DoNotOptimize(plutus::is_m_connected_k_dominating(g, d, 2, 3));
}
BENCHMARK(BM_Verify)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_Oracle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const plutus::Graph g = plutus::random_geometric(n, 0.5, 3).graph();
  for (auto _ : state) benchmark::DoNotOptimize(plutus::brute_force_min_mcds(g, 1, 1));
}
BENCHMARK(BM_Oracle)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
