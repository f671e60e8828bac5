#include <benchmark/benchmark.h>

#include "bk/brieskorn.hpp"
#include "bk/thom_sebastiani.hpp"

using namespace bk;

namespace {

GermPtr barlet() {
  return std::make_shared<GermProblem>(
      make_germ("b35", {"x", "y", "z"}, {"1", "1", "-1"}, "1/5*x^5 + 1/5*y^5 + 1/3*x^3*y^3*z"));
}

}  // namespace

static void BM_KernelGenerators(benchmark::State& state) {
  const auto g = barlet();
  for (auto _ : state) {
    clear_groebner_cache();
    benchmark::DoNotOptimize(kernel_form_generators(*g, 2));
  }
}
BENCHMARK(BM_KernelGenerators)->Unit(benchmark::kMillisecond);

// top slice of x^a + y^b at weight range(0) (in units of the degree)
static void BM_HSlice(benchmark::State& state) {
  const GermProblem g = make_germ("e", {"x", "y"}, {"4", "3"}, "x^3 + y^4");
  const Rational c = g.degree() * state.range(0) + 7;
  for (auto _ : state) benchmark::DoNotOptimize(h_slice(g, 2, c).dimension());
}
BENCHMARK(BM_HSlice)->DenseRange(1, 9, 2)->Unit(benchmark::kMillisecond);

static void BM_TorsionSearch(benchmark::State& state) {
  const auto g = barlet();
  const CohomologyClass c(g, DifferentialForm::volume(parse_polynomial("y^2*z", g->variables())));
  for (auto _ : state) benchmark::DoNotOptimize(torsion_order_t(c, static_cast<int>(state.range(0)), {12}));
}
BENCHMARK(BM_TorsionSearch)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

static void BM_TsCompare(benchmark::State& state) {
  const GermProblem f = make_germ("f", {"x", "y"}, {"1", "1"}, "x^3 + y^3");
  const GermProblem g = make_germ("g", {"z"}, {"1"}, "z^2");
  for (auto _ : state) benchmark::DoNotOptimize(ts_compare(f, g).holds());
}
BENCHMARK(BM_TsCompare)->Unit(benchmark::kMillisecond);
