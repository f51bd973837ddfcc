// Serial reference vs OpenMP entry points. Run with OMP_NUM_THREADS set to
// compare scaling; results are identical by construction.

#include <benchmark/benchmark.h>

#include "homlie/kernels.hpp"
#include "homlie/random.hpp"
#include "homlie/variety_lab.hpp"

namespace {

using namespace homlie;

const FieldSpec F = FieldSpec::prime(10007);

void BM_Genericity(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(genericity_experiment(dim, 200, F, 1));
  state.SetItemsProcessed(state.iterations() * 200);
}

void BM_GenericitySerial(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(genericity_experiment_serial(dim, 200, F, 1));
  state.SetItemsProcessed(state.iterations() * 200);
}

void BM_Invariance(benchmark::State& state) {
  const SkewAlgebra a = random_algebra(4, F, 3);
  for (auto _ : state) benchmark::DoNotOptimize(invariance_battery(a, 50, 1));
}

void BM_InvarianceSerial(benchmark::State& state) {
  const SkewAlgebra a = random_algebra(4, F, 3);
  for (auto _ : state) benchmark::DoNotOptimize(invariance_battery_serial(a, 50, 1));
}

kernels::ResidueMatrix random_residues(std::size_t n) {
  kernels::ResidueMatrix m{n, n, 4294967291ULL, std::vector<std::uint64_t>(n * n)};
  CounterRng rng(n);
  for (auto& x : m.data) x = rng.below(m.p);
  return m;
}

void BM_DetModP(benchmark::State& state) {
  const auto m = random_residues(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::determinant_mod_p(m));
}

void BM_DetModPSerial(benchmark::State& state) {
  const auto m = random_residues(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::determinant_mod_p_serial(m));
}

}  // namespace

BENCHMARK(BM_Genericity)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GenericitySerial)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Invariance)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_InvarianceSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DetModP)->Arg(64)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DetModPSerial)->Arg(64)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
