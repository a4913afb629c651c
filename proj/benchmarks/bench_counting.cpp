#include <benchmark/benchmark.h>

#include "pshcalc/bipartite_count.hpp"
#include "pshcalc/transition.hpp"

namespace {

using namespace pshcalc;

void BM_CountAllPairs(benchmark::State& state) {
  const auto ps = partitions_of(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    MemoTable memo;
    for (const auto& a : ps) {
      for (const auto& b : ps) benchmark::DoNotOptimize(s_count(a, b, memo));
    }
  }
  state.counters["pairs"] = static_cast<double>(ps.size() * ps.size());
}
BENCHMARK(BM_CountAllPairs)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

void BM_CountOnesSquare(benchmark::State& state) {
  Partition ones(std::vector<int>(static_cast<std::size_t>(state.range(0)), 1));
  for (auto _ : state) benchmark::DoNotOptimize(s_count(ones, ones));
}
BENCHMARK(BM_CountOnesSquare)->DenseRange(8, 24, 8);

void BM_TransitionMatrix(benchmark::State& state) {
  BuildOptions options;
  options.memo_policy = state.range(1) == 0 ? MemoPolicy::shared : MemoPolicy::per_cell;
  for (auto _ : state) {
    benchmark::DoNotOptimize(transition_matrix(static_cast<int>(state.range(0)), options));
  }
}
BENCHMARK(BM_TransitionMatrix)
    ->ArgsProduct({{8, 12, 16}, {0, 1}})
    ->ArgNames({"n", "per_cell"})
    ->Unit(benchmark::kMillisecond);

void BM_Invert(benchmark::State& state) {
  auto m = transition_matrix(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(invert_unitriangular(m));
}
BENCHMARK(BM_Invert)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);

void BM_CFromD(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto m = transition_matrix(n);
  CoefficientVector d(n, Side::d);
  for (const auto& a : m.order()) d.set(a, BigInt(1));
  for (auto _ : state) benchmark::DoNotOptimize(c_from_d(m, d));
}
BENCHMARK(BM_CFromD)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
