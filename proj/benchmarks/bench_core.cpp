#include <benchmark/benchmark.h>

#include "scc/asymptotics.hpp"
#include "scc/concave.hpp"
#include "scc/number_theory.hpp"
#include "scc/series.hpp"

namespace {

void BM_PartitionCacheFill(benchmark::State& state) {
  for (auto _ : state) {
    scc::PartitionCache cache;
    cache.ensure(state.range(0));
    benchmark::DoNotOptimize(cache(state.range(0)));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PartitionCacheFill)->RangeMultiplier(4)->Range(1 << 10, 1 << 14)->Complexity();

void BM_VdFast(benchmark::State& state) {
  scc::PartitionCache cache;
  cache.ensure(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(scc::vd_fast(state.range(0), cache));
}
BENCHMARK(BM_VdFast)->Arg(1000)->Arg(10'000)->Arg(40'000);

void BM_VdAndrews(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(scc::vd_andrews(state.range(0)));
}
BENCHMARK(BM_VdAndrews)->Arg(200)->Arg(1000);

void BM_RankGenfunc(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(scc::vdm_genfunc(state.range(0)));
}
BENCHMARK(BM_RankGenfunc)->Arg(50)->Arg(200);

void BM_RankProp1(benchmark::State& state) {
  scc::PartitionCache cache;
  for (auto _ : state) benchmark::DoNotOptimize(scc::rank_table_prop1(state.range(0), cache));
}
BENCHMARK(BM_RankProp1)->Arg(50)->Arg(200);

void BM_SeriesMultiply(benchmark::State& state) {
  const auto a = scc::inverse_euler(state.range(0));
  const auto b = scc::poch_neg(1, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_SeriesMultiply)->Arg(100)->Arg(1000);

void BM_EmpiricalCdf(benchmark::State& state) {
  scc::PartitionCache cache;
  const auto grid = scc::uniform_grid(-4.0, 4.0, 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(scc::empirical_rank_cdf(state.range(0), grid, cache));
}
BENCHMARK(BM_EmpiricalCdf)->Arg(3000)->Arg(40'000);

}  // namespace

BENCHMARK_MAIN();
