// Serial reference vs OpenMP sweep, plus the per-series estimator cost.

#include <benchmark/benchmark.h>

#include <omp.h>

#include "mele/compare.hpp"
#include "mele/ma1.hpp"

using namespace mele;

namespace {

compare::SimConfig bench_config(std::size_t n_rep) {
  auto cfg = compare::default_sim_config();
  cfg.theta_grid = {-0.9, -0.5, 0.0, 0.5, 0.9};
  cfg.n_rep = n_rep;
  return cfg;
}

void BM_SweepSerial(benchmark::State& state) {
  const auto cfg = bench_config(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(compare::simulate_estimates(cfg, compare::Execution::serial));
  }
  state.SetItemsProcessed(state.iterations() * cfg.theta_grid.size() * cfg.n_rep);
}
BENCHMARK(BM_SweepSerial)->Arg(200)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_SweepParallel(benchmark::State& state) {
  auto cfg = bench_config(static_cast<std::size_t>(state.range(0)));
  cfg.threads = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(compare::simulate_estimates(cfg, compare::Execution::parallel));
  }
  state.SetItemsProcessed(state.iterations() * cfg.theta_grid.size() * cfg.n_rep);
  state.counters["threads"] = static_cast<double>(cfg.threads);
}
BENCHMARK(BM_SweepParallel)
    ->ArgsProduct({{200}, benchmark::CreateRange(1, omp_get_max_threads(), 2)})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

void BM_EstimateMa1(benchmark::State& state) {
  const long n = state.range(0);
  const auto series = ma1::simulate_ma1(0.5, n, 1.0, {compare::kDefaultSeed, 0});
  const auto rule = default_theta_rule();
  const auto prior = jeffreys_ma1_prior();
  for (auto _ : state) benchmark::DoNotOptimize(ma1::estimate_ma1(series.z, rule, prior));
}
BENCHMARK(BM_EstimateMa1)->Arg(10)->Arg(50)->Arg(200)->Unit(benchmark::kMicrosecond);

void BM_NewboldLoglik(benchmark::State& state) {
  const auto series = ma1::simulate_ma1(0.5, state.range(0), 1.0, {compare::kDefaultSeed, 1});
  double theta = -0.99;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ma1::newbold_loglik(theta, series.z));
    theta = theta > 0.99 ? -0.99 : theta + 0.01;
  }
}
BENCHMARK(BM_NewboldLoglik)->Arg(50)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
