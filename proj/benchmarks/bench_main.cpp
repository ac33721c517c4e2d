#include <benchmark/benchmark.h>

#include "rank2/cluster.hpp"
#include "rank2/dyck.hpp"
#include "rank2/greedy.hpp"

using namespace rank2;

static void BM_MaxRecurrence(benchmark::State& state) {
  const auto a = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(greedy_max_recurrence(3, 3, a, a));
}
BENCHMARK(BM_MaxRecurrence)->Arg(8)->Arg(32)->Arg(128);

static void BM_LinearRecurrence(benchmark::State& state) {
  const auto a = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(greedy_linear_recurrence(3, 3, a, a));
}
BENCHMARK(BM_LinearRecurrence)->Arg(8)->Arg(32)->Arg(128);

static void BM_DyckCount(benchmark::State& state) {
  const DyckPath d = max_dyck_path(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(count_compatible(d, 2, 3));
}
BENCHMARK(BM_DyckCount)->Args({6, 6})->Args({8, 8})->Args({10, 9});

static void BM_ExchangeStep(benchmark::State& state) {
  const SeedParams s(3, 3);
  const LaurentPoly x = to_laurent(greedy_max_recurrence(3, 3, 4, 7)) +
                        to_laurent(greedy_max_recurrence(3, 3, 7, 4));
  for (auto _ : state) benchmark::DoNotOptimize(expand_at_cluster(x, s, state.range(0)));
}
BENCHMARK(BM_ExchangeStep)->Arg(2)->Arg(3)->Arg(0)->Unit(benchmark::kMillisecond);

static void BM_ExactDiv(benchmark::State& state) {
  const SeedParams s(2, 2);
  const LaurentPoly num = cluster_variable(s, 8) * cluster_variable(s, 6);
  const LaurentPoly den = cluster_variable(s, 6);
  for (auto _ : state) benchmark::DoNotOptimize(exact_div(num, den));
}
BENCHMARK(BM_ExactDiv);
BENCHMARK_MAIN();
