#include <benchmark/benchmark.h>

#include <random>

#include "boolift/boolean_function.hpp"
#include "boolift/comm.hpp"
#include "boolift/patterns.hpp"
#include "boolift/query_models.hpp"
#include "boolift/rank.hpp"
#include "boolift/transforms.hpp"

using namespace boolift;

namespace {

BooleanFunction random_function(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return BooleanFunction::from_predicate(n, [&](std::uint64_t) { return rng() & 1u; });
}

void BM_MobiusDense(benchmark::State& state) {
  const auto f = random_function(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(mobius_dense(f));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.input_count()));
}
BENCHMARK(BM_MobiusDense)->DenseRange(8, 20, 4);

void BM_FourierDense(benchmark::State& state) {
  const auto f = random_function(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(fourier_dense(f, FourierConvention::PlusMinus));
}
BENCHMARK(BM_FourierDense)->DenseRange(8, 20, 4);

void BM_PatternComplexity(benchmark::State& state) {
  const auto f = random_function(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(pattern_complexity(f));
}
BENCHMARK(BM_PatternComplexity)->DenseRange(6, 12, 2);

void BM_PatternComplexityAddr(benchmark::State& state) {
  const auto f = named::addr(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pattern_complexity(f));
}
BENCHMARK(BM_PatternComplexityAddr)->Arg(8)->Arg(16);

void BM_RankRandomAnd(benchmark::State& state) {
  const auto f = random_function(static_cast<int>(state.range(0)), 4);
  const auto m = comm_matrix(compose(f, gadgets::and2()));
  for (auto _ : state) benchmark::DoNotOptimize(matrix_rank(m));
}
BENCHMARK(BM_RankRandomAnd)->DenseRange(4, 8, 1)->Unit(benchmark::kMillisecond);

void BM_RankBareiss(benchmark::State& state) {
  const auto f = random_function(static_cast<int>(state.range(0)), 4);
  const auto m = comm_matrix(compose(f, gadgets::and2()));
  for (auto _ : state) benchmark::DoNotOptimize(rank_bareiss(m.rows));
}
BENCHMARK(BM_RankBareiss)->DenseRange(4, 6, 1)->Unit(benchmark::kMillisecond);

void BM_OneWayAnd(benchmark::State& state) {
  const auto f = random_function(static_cast<int>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(one_way_cc(comm_matrix(compose(f, gadgets::and2()))));
}
BENCHMARK(BM_OneWayAnd)->DenseRange(4, 10, 2);

void BM_NaadtExact(benchmark::State& state) {
  const auto f = random_function(static_cast<int>(state.range(0)), 6);
  for (auto _ : state) benchmark::DoNotOptimize(naadt_exact(f));
}
BENCHMARK(BM_NaadtExact)->DenseRange(3, 5, 1);

void BM_SeparatingFamily(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(separating_family(16, static_cast<int>(state.range(0)), std::nullopt, 0));
}
BENCHMARK(BM_SeparatingFamily)->DenseRange(1, 3, 1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
