#include <benchmark/benchmark.h>

#include "simplex_cover/simplex_cover.hpp"

using namespace simplex_cover;

namespace {

void BM_BuildCover(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(build_cover(d, n));
  state.counters["elements"] = static_cast<double>(cover_count(d, n));
}
BENCHMARK(BM_BuildCover)->Args({2, 10})->Args({3, 6})->Args({4, 4})->Args({5, 3})->Unit(benchmark::kMillisecond);

void BM_EnumerateSimplex(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_simplex_triangulation(d, n));
}
BENCHMARK(BM_EnumerateSimplex)->Args({3, 6})->Args({5, 6})->Unit(benchmark::kMillisecond);

void BM_Witness(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  const auto cover = build_cover(d, n);
  const auto samples = random_samples(d, n, delta(n), 1024, 1);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(witness(samples[i], cover));
    i = (i + 1) % samples.size();
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Witness)->Args({2, 5})->Args({4, 3})->Args({6, 3});

void BM_Contains(benchmark::State& state) {
  const auto cover = build_cover(4, 3);
  const auto samples = random_samples(4, 3, delta(3), 1024, 2);
  const auto& k = cover.elements()[cover.size() / 2].simplex;
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(k.contains(samples[i]));
    i = (i + 1) % samples.size();
  }
}
BENCHMARK(BM_Contains);

void BM_ContainsOracle(benchmark::State& state) {
  const auto cover = build_cover(4, 3);
  const auto samples = random_samples(4, 3, delta(3), 1024, 2);
  const auto& k = cover.elements()[cover.size() / 2].simplex;
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(k.contains_oracle(samples[i]));
    i = (i + 1) % samples.size();
  }
}
BENCHMARK(BM_ContainsOracle);

void BM_RationalAddSmall(benchmark::State& state) {
  Rational a{355, 113};
  const Rational b{-7, 1000003};
  for (auto _ : state) {
    benchmark::DoNotOptimize(a + b);
    benchmark::ClobberMemory();
  }
}
BENCHMARK(BM_RationalAddSmall);

// Operands beyond the int64 fast path.
void BM_RationalAddBig(benchmark::State& state) {
  const Rational a = Rational::parse("123456789012345678901234567890/7");
  const Rational b = Rational::parse("-98765432109876543210/11");
  for (auto _ : state) benchmark::DoNotOptimize(a + b);
}
BENCHMARK(BM_RationalAddBig);

void BM_CoverageReport(benchmark::State& state) {
  const auto cover = build_cover(4, 3);
  const auto samples = random_samples(4, 3, delta(3), 10'000, 3);
  for (auto _ : state) benchmark::DoNotOptimize(coverage_report(cover, samples, delta(3), 1));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(samples.size()));
}
BENCHMARK(BM_CoverageReport)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
