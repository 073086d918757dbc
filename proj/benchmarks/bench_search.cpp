#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "ramsey/builder.hpp"
#include "ramsey/extraction.hpp"
#include "ramsey/harness.hpp"
#include "ramsey/set_algebra.hpp"

using namespace ramsey;

namespace {

SequenceSource<GaussianInt> random_seq(Index n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> d(-50, 50);
  std::vector<GaussianInt> v;
  v.reserve(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) v.push_back(GaussianInt{d(rng), d(rng)});
  return SequenceSource<GaussianInt>::from_list(std::move(v));
}

void BM_ExtractPrefixSum(benchmark::State& state) {
  const auto x = random_seq(700, 11);
  const GaussianInt z{static_cast<long>(state.range(0)), 2};
  for (auto _ : state) {
    benchmark::DoNotOptimize(extract_divisible_block(x, z, 0));
  }
}
BENCHMARK(BM_ExtractPrefixSum)->Arg(1)->Arg(3)->Arg(4);

void BM_ExtractEqualRemainder(benchmark::State& state) {
  const auto x = random_seq(700, 12);
  const GaussianInt z{static_cast<long>(state.range(0)), 2};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        extract_divisible_block(x, z, 0, ExtractStrategy::kEqualRemainder));
  }
}
BENCHMARK(BM_ExtractEqualRemainder)->Arg(1)->Arg(3)->Arg(4);

void BM_BuildFsFp(benchmark::State& state) {
  const auto x = random_seq(400, 13);
  const auto set = parse_gaussian_set("ideal(3)");
  const int depth = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_fs_fp(x, set, depth));
  }
}
BENCHMARK(BM_BuildFsFp)->Arg(3)->Arg(5)->Arg(7);

void BM_SetMembership(benchmark::State& state) {
  const auto set =
      parse_gaussian_set("ideal(2) & !shift(1+i)residue(2+i; 1) | dilate(2)ideal(3)");
  const auto box = gaussian_box(6);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(set.contains(box[i++ % box.size()]));
  }
}
BENCHMARK(BM_SetMembership);

void BM_SchurSearch(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(schur_search(n, 2));
  }
}
BENCHMARK(BM_SchurSearch)->Arg(5)->Arg(10)->Arg(14);

}  // namespace
