#include <benchmark/benchmark.h>

#include <random>

#include "cyclegas/oracle.hpp"
#include "cyclegas/partition.hpp"
#include "cyclegas/sampler.hpp"
#include "cyclegas/special_functions.hpp"

namespace {

using namespace cyclegas;

CycleSumSequence random_cycles(int n) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.1, 2.0);
  std::vector<double> c(n);
  for (double& x : c) x = u(rng);
  return CycleSumSequence(std::move(c));
}

void BM_Zeta(benchmark::State& state) {
  const double r = static_cast<double>(state.range(0)) / 2.0;
  for (auto _ : state) benchmark::DoNotOptimize(riemann_zeta(r));
}
BENCHMARK(BM_Zeta)->Arg(3)->Arg(6)->Arg(8);

void BM_Polylog(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(polylog(1.5, 0.9));
}
BENCHMARK(BM_Polylog);

void BM_CanonicalRecursion(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto cycles = random_cycles(n);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_partition_recursive(cycles, n));
}
BENCHMARK(BM_CanonicalRecursion)->Arg(10)->Arg(25)->Arg(1000);

void BM_CanonicalEnumeration(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto cycles = random_cycles(n);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_partition_enumerated(cycles, n).total);
}
BENCHMARK(BM_CanonicalEnumeration)->Arg(10)->Arg(20)->Arg(25);

void BM_OccupationEnumeration(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto spectrum = ModeSpectrum::nondegenerate({0.2, 0.5, 0.9, 1.3, 2.0, 2.8});
  for (auto _ : state) benchmark::DoNotOptimize(canonical_by_occupation(spectrum, n, 1.0));
}
BENCHMARK(BM_OccupationEnumeration)->Arg(4)->Arg(8)->Arg(16);

void BM_Sampler(benchmark::State& state) {
  SampleConfig config;
  config.replicas = static_cast<int>(state.range(0));
  config.state = ThermoState(1.0, 100.0);
  for (auto _ : state) benchmark::DoNotOptimize(estimate_observables(config).n_replicas);
  state.SetItemsProcessed(state.iterations() * config.replicas);
}
BENCHMARK(BM_Sampler)->Arg(1000)->Arg(20000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
