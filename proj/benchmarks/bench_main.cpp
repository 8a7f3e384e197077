#include <benchmark/benchmark.h>

#include <random>

#include "zerosum/constructions.hpp"
#include "zerosum/factorization.hpp"
#include "zerosum/lattice.hpp"
#include "zerosum/sweep.hpp"

using namespace zerosum;

namespace {

FiniteAbelianGroup group_arg(int which) {
  switch (which) {
    case 0: return FiniteAbelianGroup({16});
    case 1: return FiniteAbelianGroup({2, 8});
    case 2: return FiniteAbelianGroup({4, 4});
    case 3: return FiniteAbelianGroup({2, 2, 4});
    default: return FiniteAbelianGroup({2, 2, 2, 2});
  }
}

void BM_AtomsOdd(benchmark::State& state) {
  const auto s = nonsimple_odd_set(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_atoms(s).size());
}
BENCHMARK(BM_AtomsOdd)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_MinDelta(benchmark::State& state) {
  const auto atoms = enumerate_atoms(nonsimple_odd_set(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(min_delta(atoms));
}
BENCHMARK(BM_MinDelta)->DenseRange(2, 4)->Unit(benchmark::kMicrosecond);

void BM_LengthSet(benchmark::State& state) {
  const auto atoms = enumerate_atoms(nonsimple_even_set(3));
  std::mt19937_64 rng(1);
  const auto b = random_product(atoms, static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(length_set(b, atoms).lengths.size());
}
BENCHMARK(BM_LengthSet)->RangeMultiplier(2)->Range(4, 32)->Unit(benchmark::kMicrosecond);

void BM_Sweep(benchmark::State& state) {
  const auto g = group_arg(static_cast<int>(state.range(0)));
  SweepOptions opt;
  opt.gcd_prune = state.range(1) != 0;
  opt.threads = static_cast<unsigned>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(delta_star(g, opt).max_delta_star);
  state.SetLabel(g.to_string());
}
BENCHMARK(BM_Sweep)
    ->ArgsProduct({{0, 1, 2, 3, 4}, {1}, {1, 4}})
    ->Args({0, 0, 4})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
