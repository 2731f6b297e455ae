#include <benchmark/benchmark.h>

#include <numbers>

#include "mzinfo/info_geometry.hpp"
#include "mzinfo/oracle.hpp"
#include "mzinfo/rng.hpp"
#include "mzinfo/trial_engine.hpp"

namespace {

using namespace mzinfo;

void BM_OracleDetection(benchmark::State& state) {
  SetupConfig c;
  c.r1 = 1.3;
  c.p = 2.0;
  for (auto _ : state) {
    c.r2 += 1e-9;
    benchmark::DoNotOptimize(oracle::detection_probabilities(c));
  }
}
BENCHMARK(BM_OracleDetection);

void BM_OdeSolve(benchmark::State& state) {
  const double step = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(constant_metric_ode_solve(1.0, 1, 4.0 * std::numbers::pi, step));
  }
}
BENCHMARK(BM_OdeSolve)->Arg(1000)->Arg(10000);

void BM_RunTrials(benchmark::State& state) {
  SetupConfig c;
  c.r1 = std::numbers::pi / 3.0;
  c.p = 1.0;
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_trials(c, n, 7).counts);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RunTrials)->Arg(100'000)->Arg(1'000'000);

void BM_FitK(benchmark::State& state) {
  const FringeLaw law(2.0, FringeSign::Plus);
  std::vector<FitPoint> data;
  for (int j = 0; j < 20; ++j) {
    const double x = std::numbers::pi * j / 19.0;
    const TrialRun run = run_trials(law, x, 100'000, rng::derive_seed(7, j));
    data.push_back({x, run.counts.n1, run.counts.n2});
  }
  for (auto _ : state) benchmark::DoNotOptimize(fit_k(data, FringeSign::Plus));
}
BENCHMARK(BM_FitK);

}  // namespace
BENCHMARK_MAIN();
