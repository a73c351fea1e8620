#include <benchmark/benchmark.h>

#include "graphcalc/tower.hpp"

using namespace graphcalc;

namespace {

// Complete graph on n points with every arrow out of vertex 1 removed except 1->2.
Digraph sparse_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= n; ++i) {
    for (Vertex j = 1; j <= n; ++j) {
      if (i != j && (i != 1 || j == 2) && (j != 1 || i == n)) edges.emplace_back(i, j);
    }
  }
  return Digraph(n, edges);
}

void BM_TowerParallel(benchmark::State& state) {
  const Digraph g = sparse_graph(static_cast<int>(state.range(0)));
  const int degree = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(build_tower(g, degree));
}

void BM_TowerSerial(benchmark::State& state) {
  const Digraph g = sparse_graph(static_cast<int>(state.range(0)));
  const int degree = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(build_tower_serial(g, degree));
}

}  // namespace

BENCHMARK(BM_TowerParallel)->Args({4, 3})->Args({5, 3})->Args({4, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TowerSerial)->Args({4, 3})->Args({5, 3})->Args({4, 4})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
