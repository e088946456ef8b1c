#include <benchmark/benchmark.h>

#include <vector>

#include "permprop/joint_table.hpp"
#include "permprop/montecarlo.hpp"
#include "permprop/permutation.hpp"
#include "permprop/rng.hpp"
#include "permprop/spherical.hpp"

using namespace permprop;

static void BM_inversions_merge(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  SplitMix64 rng(1);
  const Permutation w = sample_permutation(n, rng);
  std::vector<std::int32_t> buf, tmp;
  for (auto _ : state) {
    benchmark::DoNotOptimize(detail::inversions_merge(w.word(), buf, tmp));
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_inversions_merge)->Arg(64)->Arg(512)->Arg(2048)->Arg(8192);

static void BM_inversions_quadratic(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  SplitMix64 rng(1);
  const Permutation w = sample_permutation(n, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(inversion_number_quadratic(w));
  }
}
BENCHMARK(BM_inversions_quadratic)->Arg(64)->Arg(512);

static void BM_sample_statistic(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t chunk = 0;
  for (auto _ : state) {
    const auto summary = estimate_moments(n, kChunkSamples, 7 + chunk++, 1);
    benchmark::DoNotOptimize(summary.proper_hits);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(kChunkSamples));
}
BENCHMARK(BM_sample_statistic)->Arg(100)->Arg(1000);

static void BM_joint_table_dp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lehmer_dp_joint_table(n).total());
  }
}
BENCHMARK(BM_joint_table_dp)->Arg(10)->Arg(20)->Arg(25)->Unit(benchmark::kMillisecond);

static void BM_witness_search_longest(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<std::int32_t> word(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) word[static_cast<size_t>(i)] = n - i;
  const Permutation w(word);
  const auto J = left_descent_set(w).positions;
  const std::vector<int> I(J.begin(), J.end());
  for (auto _ : state) {
    benchmark::DoNotOptimize(witness_word(w, I));
  }
}
BENCHMARK(BM_witness_search_longest)->Arg(5)->Arg(6)->Arg(7);

BENCHMARK_MAIN();
