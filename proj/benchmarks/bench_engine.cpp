#include <benchmark/benchmark.h>

#include "mergesplit/engine.hpp"
#include "mergesplit/games.hpp"
#include "mergesplit/partition.hpp"
#include "mergesplit/stability.hpp"

using namespace mergesplit;

namespace {

Partition singletons(int n) {
  std::vector<std::vector<PlayerId>> blocks;
  for (PlayerId i = 1; i <= n; ++i) blocks.push_back({i});
  return make_collection(blocks, n);
}

Partition target_for(int n) {
  // Pairs of consecutive players, the last one alone when n is odd.
  std::vector<std::vector<PlayerId>> blocks;
  for (PlayerId i = 1; i <= n; i += 2) {
    if (i + 1 <= n) {
      blocks.push_back({i, i + 1});
    } else {
      blocks.push_back({i});
    }
  }
  return make_collection(blocks, n);
}

ComparisonRelation example61(int n, OrderKind kind) {
  return induced_relation_v(build_example61(target_for(n), kind), kind);
}

void BM_AllPartitions(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(all_partitions(PlayerSet::grand(n)));
}
BENCHMARK(BM_AllPartitions)->DenseRange(4, 10, 2);

void BM_DcDirect(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ComparisonRelation rel = example61(n, OrderKind::utilitarian);
  const Partition p = target_for(n);
  for (auto _ : state) benchmark::DoNotOptimize(is_dc_stable_direct(p, rel));
}
BENCHMARK(BM_DcDirect)->DenseRange(3, 6);

void BM_DcLemma(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ComparisonRelation rel = example61(n, OrderKind::utilitarian);
  const Partition p = target_for(n);
  for (auto _ : state) benchmark::DoNotOptimize(is_dc_stable_lemma(p, rel));
}
BENCHMARK(BM_DcLemma)->DenseRange(3, 6);

void BM_Iterate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ComparisonRelation rel = example61(n, OrderKind::leximin);
  const Partition start = singletons(n);
  for (auto _ : state) benchmark::DoNotOptimize(iterate(start, rel));
}
BENCHMARK(BM_Iterate)->DenseRange(3, 7);

void BM_AllTerminalOutcomes(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ComparisonRelation rel = example61(n, OrderKind::nash);
  const Partition start = singletons(n);
  for (auto _ : state) benchmark::DoNotOptimize(all_terminal_outcomes(start, rel));
}
BENCHMARK(BM_AllTerminalOutcomes)->DenseRange(3, 5);

}  // namespace

BENCHMARK_MAIN();
