#include <benchmark/benchmark.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "twostack/brute_force.hpp"
#include "twostack/formulas.hpp"
#include "twostack/stack_sort.hpp"
#include "twostack/tree_enumeration.hpp"

using namespace twostack;

static Permutation random_permutation(std::size_t n, std::uint32_t seed) {
  std::vector<Entry> e(n);
  std::iota(e.begin(), e.end(), 1);
  std::mt19937 gen{seed};
  std::shuffle(e.begin(), e.end(), gen);
  return Permutation::from_trusted(std::move(e));
}

static void BM_StackSort(benchmark::State& state) {
  const auto p = random_permutation(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) {
    auto sorted = stack_sort(p);
    benchmark::DoNotOptimize(sorted);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_StackSort)->RangeMultiplier(4)->Range(8, 4096)->Complexity();

static void BM_TwoStackTest(benchmark::State& state) {
  const auto p = random_permutation(static_cast<std::size_t>(state.range(0)), 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_t_stack_sortable(p, 2));
  }
}
BENCHMARK(BM_TwoStackTest)->DenseRange(8, 12, 2);

static void BM_BruteForceW(benchmark::State& state) {
  const BruteForceOptions options{static_cast<unsigned>(state.range(1))};
  for (auto _ : state) {
    auto table = brute_force_w(static_cast<std::size_t>(state.range(0)), options);
    benchmark::DoNotOptimize(table);
  }
}
BENCHMARK(BM_BruteForceW)
    ->ArgsProduct({{7, 8, 9}, {1, 4}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

static void BM_TreeEnumeration(benchmark::State& state) {
  const auto nodes = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    std::size_t count = 0;
    for_each_beta_tree(nodes, std::nullopt, [&](const BetaTree&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_TreeEnumeration)->DenseRange(6, 9)->Unit(benchmark::kMillisecond);

static void BM_TreeCounter(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    TreeCounter counter(n);
    benchmark::DoNotOptimize(counter.count(n, (n + 1) / 2));
  }
}
BENCHMARK(BM_TreeCounter)->Arg(10)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);

static void BM_WFormulaRow(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    FactorialTable fact;
    BigInt sum = 0;
    for (std::size_t k = 1; k <= n; ++k) sum += w_formula(fact, n, k);
    benchmark::DoNotOptimize(sum);
  }
}
BENCHMARK(BM_WFormulaRow)->Arg(50)->Arg(200);

BENCHMARK_MAIN();
