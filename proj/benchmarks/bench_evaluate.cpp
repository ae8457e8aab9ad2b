#include <benchmark/benchmark.h>

#include <random>

#include "parthom/classify.hpp"
#include "parthom/evaluate.hpp"
#include "parthom/oracle.hpp"

namespace {

parthom::Multigraph random_graph(std::size_t n, std::size_t m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<parthom::Multigraph::Edge> edges;
  for (std::size_t v = 1; v < n; ++v) edges.push_back({rng() % v, v});
  while (edges.size() < m) edges.push_back({rng() % n, rng() % n});
  return parthom::Multigraph(n, std::move(edges));
}

parthom::SymMatrix signs(const parthom::SignMatrix& h) { return parthom::SymMatrix(h.to_matrix()); }

void BM_EvalH4(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = signs(parthom::hadamard_h4());
  const auto v = parthom::classify(a);
  const auto g = random_graph(n, 2 * n, 5);
  for (auto _ : state) benchmark::DoNotOptimize(parthom::eval_tractable(a, v, g));
}
BENCHMARK(BM_EvalH4)->RangeMultiplier(4)->Range(16, 1024)->Unit(benchmark::kMillisecond);

void BM_EvalH2x4(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = signs(parthom::kron(parthom::hadamard_h2(), parthom::hadamard_h4()));
  const auto v = parthom::classify(a);
  const auto g = random_graph(n, 3 * n, 6);
  for (auto _ : state) benchmark::DoNotOptimize(parthom::eval_tractable(a, v, g));
}
BENCHMARK(BM_EvalH2x4)->RangeMultiplier(4)->Range(16, 256)->Unit(benchmark::kMillisecond);

void BM_Classify(benchmark::State& state) {
  parthom::SignMatrix h = parthom::hadamard_h2();
  for (int i = 1; i < state.range(0); ++i) h = parthom::kron(h, parthom::hadamard_h2());
  const auto a = signs(h);
  for (auto _ : state) benchmark::DoNotOptimize(parthom::classify(a));
}
BENCHMARK(BM_Classify)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);

void BM_OracleH2(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = signs(parthom::hadamard_h2());
  const auto g = random_graph(n, 2 * n, 7);
  for (auto _ : state) benchmark::DoNotOptimize(parthom::eval_partition_bruteforce(a, g));
}
BENCHMARK(BM_OracleH2)->DenseRange(8, 20, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
