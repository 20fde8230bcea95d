// Serial reference against OpenMP path for each parallel kernel.

#include <random>

#include <benchmark/benchmark.h>

#include "arithver/hermitian_lattice.hpp"
#include "arithver/involution_classifier.hpp"
#include "arithver/quintic_moduli.hpp"

using namespace arithver;

namespace {

Exec mode(const benchmark::State& s) { return s.range(0) ? Exec::parallel : Exec::serial; }

void BM_ShortRoots(benchmark::State& s) {
  const HermLattice L = HermLattice::thesis();
  for (auto _ : s) benchmark::DoNotOptimize(enumerate_short_roots(L, static_cast<int>(s.range(1)), mode(s)));
}

void BM_PairScan(benchmark::State& s) {
  const HermLattice L = HermLattice::thesis();
  const auto roots = enumerate_short_roots(L, static_cast<int>(s.range(1)));
  for (auto _ : s) benchmark::DoNotOptimize(verify_orthogonal_arrangement(L, roots, mode(s)));
}

void BM_OrthogonalF5(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(orthogonal_group_F5({Fp5(1), Fp5(1), Fp5(3)}, mode(s)));
}

void BM_Stabilizers(benchmark::State& s) {
  std::mt19937_64 rng(1);
  std::vector<QuinticConfig> samples;
  for (int i = 0; i < 100; ++i) samples.push_back(random_configuration(rng, i % 3));
  for (auto _ : s) benchmark::DoNotOptimize(order4_absence_check(samples, default_tol(), mode(s)));
}

}  // namespace

BENCHMARK(BM_ShortRoots)->ArgsProduct({{0, 1}, {1, 2}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PairScan)->ArgsProduct({{0, 1}, {1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OrthogonalF5)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Stabilizers)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
