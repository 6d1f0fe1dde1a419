#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "patentscore/stats.hpp"

namespace {

std::pair<std::vector<double>, std::vector<double>> vectors(std::size_t n, bool ties) {
  std::mt19937 rng(n);
  std::vector<double> x(n), y(n);
  if (ties) {
    std::uniform_int_distribution<int> dist(1, 5);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = dist(rng);
      y[i] = dist(rng);
    }
  } else {
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = dist(rng);
      y[i] = dist(rng);
    }
  }
  return {x, y};
}

void BM_Pearson(benchmark::State& state) {
  auto [x, y] = vectors(static_cast<std::size_t>(state.range(0)), false);
  for (auto _ : state)
    benchmark::DoNotOptimize(patentscore::stats::pearson(x, y));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Pearson)->Range(64, 1 << 14)->Complexity();

void BM_Spearman(benchmark::State& state) {
  auto [x, y] = vectors(static_cast<std::size_t>(state.range(0)), true);
  for (auto _ : state)
    benchmark::DoNotOptimize(patentscore::stats::spearman(x, y));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Spearman)->Range(64, 1 << 14)->Complexity();

void BM_KendallTauB(benchmark::State& state) {
  auto [x, y] = vectors(static_cast<std::size_t>(state.range(0)), true);
  for (auto _ : state)
    benchmark::DoNotOptimize(patentscore::stats::kendall(x, y));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_KendallTauB)->Range(64, 1 << 14)->Complexity();

void BM_Correlate400(benchmark::State& state) {
  auto [x, y] = vectors(400, true);  // reference corpus size
  for (auto _ : state)
    benchmark::DoNotOptimize(patentscore::stats::correlate(x, y));
}
BENCHMARK(BM_Correlate400);

void BM_KrippendorffAlpha(benchmark::State& state) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dist(1, 5);
  patentscore::stats::SparseRatings ratings(3);
  for (auto& row : ratings)
    for (int i = 0; i < state.range(0); ++i)
      row.push_back(static_cast<double>(dist(rng)));
  for (auto _ : state)
    benchmark::DoNotOptimize(patentscore::stats::krippendorff_alpha(ratings));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_KrippendorffAlpha)->Range(64, 1 << 12)->Complexity();

}  // namespace

BENCHMARK_MAIN();
