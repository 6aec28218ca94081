#include <benchmark/benchmark.h>

#include "binomoment/binomial.hpp"
#include "binomoment/freeconv.hpp"
#include "binomoment/generating.hpp"
#include "binomoment/hypergeometric.hpp"
#include "binomoment/mellin.hpp"
#include "binomoment/slater.hpp"
#include "binomoment/verify.hpp"

using namespace binomoment;

namespace {

Params pr(long pn, long pd, long rn, long rd) { return Params(Rational(pn, pd), Scalar(Rational(rn, rd))); }

void BM_Pfq(benchmark::State& state) {
  const double a[] = {1.0 / 3.0, 0.5, 0.75}, b[] = {2.0 / 3.0, 1.25};
  const double z = static_cast<double>(state.range(0)) / 100.0;
  for (auto _ : state) benchmark::DoNotOptimize(pfq(a, b, z).value);
}
BENCHMARK(BM_Pfq)->Arg(10)->Arg(50)->Arg(90)->Arg(98);

void BM_EvalV(benchmark::State& state) {
  const SlaterExpansion e = build_slater(pr(7, 3, 1, 2));
  const double x = e.domain_upper * static_cast<double>(state.range(0)) / 100.0;
  for (auto _ : state) benchmark::DoNotOptimize(eval_V(e, x));
}
BENCHMARK(BM_EvalV)->Arg(5)->Arg(50)->Arg(95);

void BM_BuildSlater(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_slater(pr(9, 4, 1, 3)));
}
BENCHMARK(BM_BuildSlater);

void BM_SeriesPowExact(benchmark::State& state) {
  const TruncatedSeries b = fuss_series(Scalar(Rational(5, 3)), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pow(b, Scalar(Rational(7, 4))));
}
BENCHMARK(BM_SeriesPowExact)->Arg(16)->Arg(32);

void BM_STransform(benchmark::State& state) {
  const MomentVector m = binomial_moments(Scalar(Rational(5, 2)), Scalar(Rational(1, 2)), 12);
  for (auto _ : state) benchmark::DoNotOptimize(s_transform(m));
}
BENCHMARK(BM_STransform);

void BM_Sample(benchmark::State& state) {
  const MellinFactorization f = factorize(pr(7, 3, 1, 2));
  for (auto _ : state) benchmark::DoNotOptimize(sample(f, static_cast<std::size_t>(state.range(0)), 1));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Sample)->Arg(1 << 16);

void BM_Certify(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(certify_measure(pr(5, 3, 1, 3), 10).passed);
}
BENCHMARK(BM_Certify)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
