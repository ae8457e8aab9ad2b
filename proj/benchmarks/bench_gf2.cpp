#include <benchmark/benchmark.h>

#include <random>

#include "parthom/gf2.hpp"

namespace {

parthom::QuadPoly random_poly(std::size_t n, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution pair(density), coin(0.5);
  parthom::QuadPoly q(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j)
      if (pair(rng)) q.toggle_pair(i, j);
    if (coin(rng)) q.toggle_linear(i);
  }
  return q;
}

void BM_CountDense(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto q = random_poly(n, 0.5, 1);
  for (auto _ : state) benchmark::DoNotOptimize(parthom::count_quadratic_ones(q));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CountDense)->RangeMultiplier(2)->Range(64, 2048)->Complexity(benchmark::oNCubed);

void BM_CountSparse(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto q = random_poly(n, 4.0 / static_cast<double>(n), 2);
  for (auto _ : state) benchmark::DoNotOptimize(parthom::count_quadratic_ones(q));
}
BENCHMARK(BM_CountSparse)->RangeMultiplier(2)->Range(64, 2048);

void BM_Bruteforce(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto q = random_poly(n, 0.5, 3);
  for (auto _ : state) benchmark::DoNotOptimize(parthom::count_quadratic_bruteforce(q));
}
BENCHMARK(BM_Bruteforce)->DenseRange(12, 20, 4);

void BM_Anf(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(4);
  std::vector<std::uint8_t> table(std::size_t{1} << k);
  for (auto& b : table) b = rng() & 1;
  for (auto _ : state) benchmark::DoNotOptimize(parthom::anf_from_truth_table(table));
}
BENCHMARK(BM_Anf)->DenseRange(8, 16, 4);

}  // namespace

BENCHMARK_MAIN();
