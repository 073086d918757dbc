#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "ramsey/configs.hpp"
#include "ramsey/gaussian.hpp"
#include "ramsey/quaternion.hpp"

using namespace ramsey;

namespace {

std::vector<GaussianInt> random_gauss(std::size_t n, long radius, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> d(-radius, radius);
  std::vector<GaussianInt> v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(GaussianInt{d(rng), d(rng)});
  return v;
}

void BM_GaussianDivRem(benchmark::State& state) {
  const auto xs = random_gauss(1024, 1L << state.range(0), 1);
  const GaussianInt z{7, 4};
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gi_divrem(xs[i++ & 1023], z));
  }
}
BENCHMARK(BM_GaussianDivRem)->Arg(8)->Arg(32)->Arg(128);

void BM_GaussianCosetReps(benchmark::State& state) {
  const GaussianInt z{static_cast<long>(state.range(0)), 1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(gi_coset_reps(z));
  }
}
BENCHMARK(BM_GaussianCosetReps)->Arg(2)->Arg(4)->Arg(7);

void BM_QuatMul(benchmark::State& state) {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<long> d(-1000, 1000);
  const LipschitzQuat x{d(rng), d(rng), d(rng), d(rng)};
  const LipschitzQuat y{d(rng), d(rng), d(rng), d(rng)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(x * y);
  }
}
BENCHMARK(BM_QuatMul);

void BM_QuatLeftCosetReps(benchmark::State& state) {
  const LipschitzQuat a{static_cast<long>(state.range(0)), 1, 0, 0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(q_left_coset_reps(a));
  }
}
BENCHMARK(BM_QuatLeftCosetReps)->Arg(1)->Arg(2);

void BM_FiniteSums(benchmark::State& state) {
  const auto terms = random_gauss(static_cast<std::size_t>(state.range(0)), 50, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fs(std::span<const GaussianInt>(terms)));
  }
}
BENCHMARK(BM_FiniteSums)->Arg(8)->Arg(12)->Arg(16);

void BM_AllProducts(benchmark::State& state) {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<long> d(-9, 9);
  std::vector<LipschitzQuat> terms;
  for (long i = 0; i < state.range(0); ++i) {
    terms.push_back(LipschitzQuat{d(rng), d(rng), d(rng), d(rng)});
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(ap(std::span<const LipschitzQuat>(terms), terms.size()));
  }
}
BENCHMARK(BM_AllProducts)->Arg(4)->Arg(5)->Arg(6);

}  // namespace
