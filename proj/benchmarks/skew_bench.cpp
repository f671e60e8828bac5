#include <benchmark/benchmark.h>

#include "bk/microdiff.hpp"

using namespace bk;

static void BM_NormalOrder(benchmark::State& state) {
  std::vector<Letter> word;
  for (int k = 0; k < state.range(0); ++k) word.push_back({k % 2 ? 's' : 't', 1});
  for (auto _ : state) benchmark::DoNotOptimize(normal_order(word));
}
BENCHMARK(BM_NormalOrder)->DenseRange(4, 24, 4);

static void BM_StExpansion(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(st_expansion_certificate(n / 2, n - n / 2).holds());
}
BENCHMARK(BM_StExpansion)->DenseRange(2, 16, 2);

static void BM_SPowerDecomposition(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(s_power_decomposition(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_SPowerDecomposition)->DenseRange(1, 8)->Unit(benchmark::kMicrosecond);
