#include <benchmark/benchmark.h>

#include "ellcy/modular.hpp"
#include "ellcy/periods.hpp"

using namespace ellcy;

// Dense bivariate product at working caps.  Dominates the mirror-map and
// coupling pushforward stages.
static void BM_Series2Mul(benchmark::State& state) {
  ModelParams mp;
  PeriodSet ps = frobenius_solve(mp, Caps{(int)state.range(0), 3});
  for (auto _ : state) benchmark::DoNotOptimize(ps.pi0 * ps.s2);
}
BENCHMARK(BM_Series2Mul)->Arg(10)->Arg(14)->Arg(20);

static void BM_FrobeniusSolve(benchmark::State& state) {
  ModelParams mp;
  for (auto _ : state)
    benchmark::DoNotOptimize(frobenius_solve(mp, Caps{(int)state.range(0), 3}));
}
BENCHMARK(BM_FrobeniusSolve)->Arg(10)->Arg(14)->Arg(20);

// Exact Gauss-Jordan over the weight-12 level-1 basis.
static void BM_FitWeight12(benchmark::State& state) {
  QExp e4 = eisenstein(4, 40);
  QExp f = e4 * e4 * e4;
  for (auto _ : state) benchmark::DoNotOptimize(fit(f, 12, 1, 0, 0, 0));
}
BENCHMARK(BM_FitWeight12);

static void BM_EtaPower(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(eta_pow(-48, 40));
}
BENCHMARK(BM_EtaPower);

BENCHMARK_MAIN();
