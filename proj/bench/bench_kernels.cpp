// Serial reference vs OpenMP kernels. Run with --benchmark_filter=... to narrow.
#include <benchmark/benchmark.h>

#include "trijac/algebra.hpp"
#include "trijac/kernels.hpp"

using namespace trijac;

namespace {

const TriParams<double> kP{0.5, 0.3, 1.7};

Exec exec_of(const benchmark::State& s) { return s.range(1) ? Exec::Parallel : Exec::Serial; }

void BM_TabulateFamily(benchmark::State& state) {
  const int nmax = static_cast<int>(state.range(0));
  const auto rule = triangle_rule(nmax + 2, kP);
  for (auto _ : state) benchmark::DoNotOptimize(tabulate_family(D3Element::sigma, nmax, kP, rule, exec_of(state)));
}

void BM_WeightedGram(benchmark::State& state) {
  const int nmax = static_cast<int>(state.range(0));
  const auto rule = triangle_rule(nmax + 2, kP);
  const Eigen::MatrixXd V = tabulate_family(D3Element::e, nmax, kP, rule, Exec::Serial);
  for (auto _ : state) benchmark::DoNotOptimize(weighted_gram(V, V, rule.weights, exec_of(state)));
}

void BM_ExactRelations(benchmark::State& state) {
  const TriParams<Rational> p{make_rational(1, 3), make_rational(2, 7), make_rational(5, 4)};
  for (auto _ : state) benchmark::DoNotOptimize(verify_appendix_a(p, state.range(0) != 0));
}

}  // namespace

BENCHMARK(BM_TabulateFamily)->ArgsProduct({{10, 20, 30}, {0, 1}})->ArgNames({"nmax", "par"})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WeightedGram)->ArgsProduct({{10, 20, 30}, {0, 1}})->ArgNames({"nmax", "par"})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExactRelations)->Arg(0)->Arg(1)->ArgName("par")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
