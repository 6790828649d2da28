#include <benchmark/benchmark.h>

#include "bhgame/game.hpp"
#include "bhgame/sweep.hpp"

using namespace bhgame;

static void BM_PopulationInformation(benchmark::State& state) {
  const SensorPair s = default_sensors();
  const double n = static_cast<double>(state.range(0)) + 0.5;
  for (auto _ : state) benchmark::DoNotOptimize(population_information(s.x, n));
}
BENCHMARK(BM_PopulationInformation)->Arg(1)->Arg(7)->Arg(14);

static void BM_JointPopulationInformation(benchmark::State& state) {
  const SensorPair s = default_sensors();
  const double n = static_cast<double>(state.range(0)) + 0.5;
  for (auto _ : state) benchmark::DoNotOptimize(population_information(s.x, n, &s.y, n));
}
BENCHMARK(BM_JointPopulationInformation)->Arg(1)->Arg(7)->Arg(14);

static void BM_PayoffMatrixUncached(benchmark::State& state) {
  const EcoParams params;
  for (auto _ : state) benchmark::DoNotOptimize(payoff_matrix({0.5, 0.2, 1.8}, params));
}
BENCHMARK(BM_PayoffMatrixUncached);

static void BM_SliceSweep(benchmark::State& state) {
  SweepConfig c;
  c.x = {0.0, 1.0, 40};
  c.y = {0.0, 1.0, 40};
  c.r = {1.8, 1.8, 1};
  c.fixed_r = 1.8;
  c.workers = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(c).completed);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(c.cell_count()));
}
BENCHMARK(BM_SliceSweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
