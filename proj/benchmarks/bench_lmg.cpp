#include <benchmark/benchmark.h>

#include "lmg/lmg.hpp"

static void BM_Spectrum(benchmark::State& state) {
  const lmg::ModelSpec spec{static_cast<int>(state.range(0)), 0.7};
  for (auto _ : state) benchmark::DoNotOptimize(lmg::spectrum(spec));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Spectrum)->RangeMultiplier(10)->Range(10, 10000)->Complexity();

static void BM_ThermalState(benchmark::State& state) {
  const lmg::ModelSpec spec{static_cast<int>(state.range(0)), 0.7};
  for (auto _ : state) benchmark::DoNotOptimize(lmg::thermal_state(spec, 0.3));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ThermalState)->RangeMultiplier(10)->Range(10, 10000)->Complexity();

static void BM_LogPartitionAsymptotic(benchmark::State& state) {
  const lmg::ModelSpec spec{2000, 0.7};
  for (auto _ : state) benchmark::DoNotOptimize(lmg::log_partition_asymptotic(spec, 3.0));
}
BENCHMARK(BM_LogPartitionAsymptotic);

static void BM_RunCycle(benchmark::State& state) {
  lmg::CycleSpec c{static_cast<int>(state.range(0)), 0.3, 0.2, 0.5, 4.0};
  for (auto _ : state) benchmark::DoNotOptimize(lmg::run_cycle(c));
}
BENCHMARK(BM_RunCycle)->Arg(2)->Arg(30)->Arg(2000);

static void BM_Sweep(benchmark::State& state) {
  const lmg::SweepSpec s{lmg::CycleSpec{20, 0.3, 0.2, 0.0, 4.0},
                         lmg::uniform_grid(0.0, 4.0, static_cast<std::size_t>(state.range(0)))};
  for (auto _ : state) benchmark::DoNotOptimize(lmg::sweep_lambda1(s));
}
BENCHMARK(BM_Sweep)->Arg(401)->Arg(4001);

static void BM_Oracle(benchmark::State& state) {
  const lmg::ModelSpec spec{static_cast<int>(state.range(0)), 0.7};
  for (auto _ : state) benchmark::DoNotOptimize(lmg::bruteforce_spectrum(spec));
}
BENCHMARK(BM_Oracle)->DenseRange(4, 10, 2);
BENCHMARK_MAIN();
