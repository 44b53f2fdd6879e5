#include <benchmark/benchmark.h>

#include "hbsum/analytic.hpp"
#include "hbsum/polys.hpp"
#include "hbsum/reciprocity.hpp"
#include "hbsum/sums.hpp"

namespace {

using hbsum::Rational;

void BM_DedekindSum(benchmark::State& state) {
  const auto b = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hbsum::dedekind_sum(377, b));
  }
}
BENCHMARK(BM_DedekindSum)->Arg(610)->Arg(6765);

void BM_HardyS5(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(hbsum::hardy_s5(377, 987));
  }
}
BENCHMARK(BM_HardyS5);

void BM_GeneralizedS5(benchmark::State& state) {
  hbsum::warm_poly_table(8);
  hbsum::SumSpec spec{3, 4, 7, 5, 9, Rational(1, 3), Rational(1, 2), Rational(-2, 5)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(hbsum::generalized_s5(spec));
  }
}
BENCHMARK(BM_GeneralizedS5);

void BM_VerifyThm11(benchmark::State& state) {
  hbsum::warm_poly_table(8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hbsum::verify_thm11(2, 1, 7, 9, Rational(1, 2),
                                                 Rational(1, 3), Rational(1, 5)));
  }
}
BENCHMARK(BM_VerifyThm11);

void BM_VerifyThm13(benchmark::State& state) {
  hbsum::warm_poly_table(8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hbsum::verify_thm13(1, 1, 3, 5, -4, Rational(1, 3),
                                                 Rational(1, 2), Rational(1, 7)));
  }
}
BENCHMARK(BM_VerifyThm13);

void BM_PolyTableBuild(benchmark::State& state) {
  const auto order = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hbsum::PolyTable::build(order));
  }
}
BENCHMARK(BM_PolyTableBuild)->Arg(16)->Arg(64);

void BM_Lemma25(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        hbsum::lemma25_check(2, 3, 1, hbsum::TruncationPlan::for_order(2)));
  }
}
BENCHMARK(BM_Lemma25);

}  // namespace

BENCHMARK_MAIN();
