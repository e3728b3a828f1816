#include <benchmark/benchmark.h>

#include "toughwalks/domcycle.hpp"
#include "toughwalks/generators.hpp"
#include "toughwalks/kwalk.hpp"
#include "toughwalks/oracles.hpp"
#include "toughwalks/prism.hpp"
#include "toughwalks/recognition.hpp"

namespace {

using namespace toughwalks;

Graph connected_split(std::size_t n, std::uint64_t seed) {
  Graph g = gen_split_graph(n, Rational(1, 2), seed);
  while (!is_connected(g)) g = gen_split_graph(n, Rational(1, 2), ++seed);
  return g;
}

void BM_Is2K2Free(benchmark::State& state) {
  const Graph g = connected_split(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(is_2k2_free(g));
  state.counters["m"] = static_cast<double>(g.m());
}
BENCHMARK(BM_Is2K2Free)->RangeMultiplier(2)->Range(16, 256);

void BM_DominatingCycle(benchmark::State& state) {
  const Graph g = connected_split(static_cast<std::size_t>(state.range(0)), 5);
  std::size_t steps = 0;
  for (auto _ : state) {
    auto r = find_edge_dominating_cycle(g);
    steps = r.trace.growth_steps();
    benchmark::DoNotOptimize(r);
  }
  state.counters["steps"] = static_cast<double>(steps);
}
BENCHMARK(BM_DominatingCycle)->RangeMultiplier(2)->Range(16, 256);

void BM_TriangleCycle(benchmark::State& state) {
  const Graph g = connected_split(static_cast<std::size_t>(state.range(0)), 7);
  const auto t = find_triangle(g);
  for (auto _ : state) benchmark::DoNotOptimize(find_edge_dominating_cycle_with_triangle(g, *t));
}
BENCHMARK(BM_TriangleCycle)->RangeMultiplier(2)->Range(16, 256);

void BM_KWalk(benchmark::State& state) {
  const Graph g = connected_split(static_cast<std::size_t>(state.range(0)), 9);
  const auto w = find_edge_dominating_cycle(g).witness;
  for (auto _ : state) benchmark::DoNotOptimize(build_k_walk(g, w, 3));
}
BENCHMARK(BM_KWalk)->RangeMultiplier(2)->Range(16, 256);

void BM_PrismDriver(benchmark::State& state) {
  const Graph g = connected_split(static_cast<std::size_t>(state.range(0)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(prism_hamiltonian(g));
}
BENCHMARK(BM_PrismDriver)->RangeMultiplier(2)->Range(16, 128);

void BM_BruteForceToughness(benchmark::State& state) {
  const Graph g = connected_split(static_cast<std::size_t>(state.range(0)), 13);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_toughness(g));
}
BENCHMARK(BM_BruteForceToughness)->DenseRange(8, 16, 4);

}  // namespace

BENCHMARK_MAIN();
