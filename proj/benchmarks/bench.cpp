#include <benchmark/benchmark.h>

#include "toda/gridft.hpp"
#include "toda/hirota.hpp"
#include "toda/lump.hpp"
#include "toda/spectral.hpp"
#include "toda/symbols.hpp"
#include "toda/tau.hpp"

using namespace toda;

static void BM_eval_tau(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_tau(Family::Theta, {1, 0.3, -0.7}));
  }
}
BENCHMARK(BM_eval_tau);

static void BM_toda_residual(benchmark::State& state) {
  const SeqField q = lump_field();
  for (auto _ : state) {
    benchmark::DoNotOptimize(toda_residual(q, {0, 1.2, 0.4}));
  }
}
BENCHMARK(BM_toda_residual);

static void BM_exchange_identity(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(exchange_identity_residual(
        Family::Theta, Family::Omega, cplx(lambda), {0, 0.8, -0.3}));
  }
}
BENCHMARK(BM_exchange_identity);

static void BM_symbols_eval(benchmark::State& state) {
  const Symbols s = symbols(0, 1.0);
  double xi = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(s.Q(xi));
    xi += 1e-6;
  }
}
BENCHMARK(BM_symbols_eval);

static void BM_assemble(benchmark::State& state) {
  const GridSpec g{double(state.range(0)), 2};
  for (auto _ : state) {
    benchmark::DoNotOptimize(assemble(g));
  }
}
BENCHMARK(BM_assemble)->Arg(4)->Arg(8);

static void BM_multiplier_solve(benchmark::State& state) {
  auto U = [](int n, double x, double y) {
    return dx_log_theta(n - 1, x, y) - dx_log_theta(n, x, y);
  };
  const FTGrid grid{20.0, int(state.range(0))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        multiplier_solve_eta_tilde(U, grid, 1e-6, /*check_mean=*/false));
  }
}
BENCHMARK(BM_multiplier_solve)->Arg(128)->Arg(256);

BENCHMARK_MAIN();
