#include <benchmark/benchmark.h>

#include "fiedler/centrality.hpp"
#include "fiedler/fcd.hpp"
#include "fiedler/graph.hpp"
#include "fiedler/shape.hpp"
#include "fiedler/spectral.hpp"

using namespace fiedler;

static void BM_EigSym(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const SymmetricMatrix L = laplacian(gnm_graph(n, 3 * n, 1));
  for (auto _ : state) benchmark::DoNotOptimize(eig_sym(L));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EigSym)->RangeMultiplier(2)->Range(16, 512)->Complexity(benchmark::oNCubed);

static void BM_FiedlerGnm(benchmark::State& state) {
  const Graph g = gnm_graph(20, 45, 7);
  for (auto _ : state) benchmark::DoNotOptimize(fiedler::fiedler(g));
}
BENCHMARK(BM_FiedlerGnm);

static void BM_AOfV(benchmark::State& state) {
  const Graph g = gnm_graph(20, 45, 7);
  for (auto _ : state) benchmark::DoNotOptimize(a_of_v(g, 6));
}
BENCHMARK(BM_AOfV);

static void BM_FcdAll(benchmark::State& state) {
  const Graph g = gnm_graph(static_cast<std::size_t>(state.range(0)), 3 * state.range(0), 3);
  for (auto _ : state) benchmark::DoNotOptimize(fcd_all(g));
}
BENCHMARK(BM_FcdAll)->Arg(20)->Arg(50)->Unit(benchmark::kMillisecond);

static void BM_Betweenness(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Graph g = gnm_graph(n, 4 * n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(betweenness(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Betweenness)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

static void BM_ShapeThickness(benchmark::State& state) {
  const ShapeGraph sg = mask_to_graph(rectangle_mask(60, 10));
  for (auto _ : state) benchmark::DoNotOptimize(thickness_profile(sg, parameterize(sg), 20));
}
BENCHMARK(BM_ShapeThickness)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
