#include <benchmark/benchmark.h>

#include "orientlat/orientlat.hpp"

using namespace orientlat;

static void BM_BuildRootedPoset(benchmark::State& state) {
  const Graph g = cycle_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_p0(g).size());
}
BENCHMARK(BM_BuildRootedPoset)->DenseRange(4, 8, 2);

static void BM_VerifyTheorem(benchmark::State& state) {
  const Graph g = complete_bipartite(2, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_theorem(g).pass);
}
BENCHMARK(BM_VerifyTheorem)->DenseRange(2, 4);

static void BM_ChromaticPolynomial(benchmark::State& state) {
  const Graph g = complete_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(chromatic_polynomial(g).linear());
}
BENCHMARK(BM_ChromaticPolynomial)->DenseRange(4, 7);

static void BM_PhiAndLift(benchmark::State& state) {
  const Graph g = path_graph(static_cast<int>(state.range(0)));
  Rng rng(1);
  const Point x = random_point(g, rng);
  for (auto _ : state) {
    const Point y = lift_fire(g, x, g.vertex_count() - 1);
    benchmark::DoNotOptimize(phi(g, y).encoding());
  }
}
BENCHMARK(BM_PhiAndLift)->DenseRange(4, 8, 2);

static void BM_ConnectedGraphs(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(connected_graphs_up_to(static_cast<int>(state.range(0))).size());
}
BENCHMARK(BM_ConnectedGraphs)->DenseRange(3, 5);
BENCHMARK_MAIN();
