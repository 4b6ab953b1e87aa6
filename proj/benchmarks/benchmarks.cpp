#include <benchmark/benchmark.h>

#include "hh/coloring.hpp"
#include "hh/families.hpp"
#include "hh/independence.hpp"
#include "hh/metrics.hpp"
#include "hh/structure.hpp"

using namespace hh;

static void BM_BuildHH(benchmark::State& state) {
  FamilyParams p{static_cast<int>(state.range(0)), static_cast<int>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(hh_graph(p));
}
BENCHMARK(BM_BuildHH)->Args({7, 2})->Args({8, 3})->Args({10, 4});

static void BM_BuildKneser(benchmark::State& state) {
  FamilyParams p{static_cast<int>(state.range(0)), static_cast<int>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(kneser_graph(p));
}
BENCHMARK(BM_BuildKneser)->Args({9, 4})->Args({11, 5});

static void BM_Diameter(benchmark::State& state) {
  Graph g = hh_graph({static_cast<int>(state.range(0)), static_cast<int>(state.range(1))});
  for (auto _ : state) benchmark::DoNotOptimize(diameter(g));
}
BENCHMARK(BM_Diameter)->Args({8, 2})->Args({8, 3})->Args({10, 4});

static void BM_OddGirth(benchmark::State& state) {
  Graph g = hh_graph({static_cast<int>(state.range(0)), static_cast<int>(state.range(1))});
  for (auto _ : state) benchmark::DoNotOptimize(odd_girth(g));
}
BENCHMARK(BM_OddGirth)->Args({8, 2})->Args({8, 3});

static void BM_Quotient(benchmark::State& state) {
  FamilyParams p{static_cast<int>(state.range(0)), static_cast<int>(state.range(1))};
  Graph g = hh_graph(p);
  auto part = three_cell_partition(p);
  for (auto _ : state) benchmark::DoNotOptimize(quotient_matrix(g, part));
}
BENCHMARK(BM_Quotient)->Args({8, 2})->Args({9, 3});

static void BM_AlphaSmall(benchmark::State& state) {
  FamilyParams p{static_cast<int>(state.range(0)), static_cast<int>(state.range(1))};
  Graph g = hh_graph(p);
  auto seed = best_constructed_set(p);
  for (auto _ : state)
    benchmark::DoNotOptimize(alpha_exact(g, std::chrono::milliseconds(600000), &seed));
}
BENCHMARK(BM_AlphaSmall)->Args({6, 2})->Args({7, 3})->Unit(benchmark::kMillisecond);

static void BM_ChiSmall(benchmark::State& state) {
  Graph g = hh_graph({static_cast<int>(state.range(0)), static_cast<int>(state.range(1))});
  for (auto _ : state)
    benchmark::DoNotOptimize(chi_exact(g, std::chrono::milliseconds(600000)));
}
BENCHMARK(BM_ChiSmall)->Args({6, 2})->Args({7, 2})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
