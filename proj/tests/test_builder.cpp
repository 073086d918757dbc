#include <random>

#include "doctest.h"
#include "ramsey/builder.hpp"

using namespace ramsey;

namespace {

SequenceSource<GaussianInt> gauss_ones(Index bound = 600) {
  return {[](Index) { return GaussianInt{1, 0}; }, bound, "ones"};
}

SequenceSource<LipschitzQuat> quat_ones(Index bound = 600) {
  return {[](Index) { return LipschitzQuat{1, 0, 0, 0}; }, bound, "ones"};
}

SequenceSource<GaussianInt> random_gauss_seq(std::mt19937_64& rng, Index bound, long radius) {
  std::uniform_int_distribution<long> d(-radius, radius);
  std::vector<GaussianInt> values;
  values.reserve(static_cast<std::size_t>(bound));
  for (Index i = 0; i < bound; ++i) values.push_back(GaussianInt{d(rng), d(rng)});
  return SequenceSource<GaussianInt>::from_list(std::move(values));
}

}  // namespace

TEST_CASE("candidate_blocks enumeration order") {
  const auto blocks = candidate_blocks(0, 10, 8);
  const std::vector<IndexSet> expect{IndexSet{1},          IndexSet{2},    IndexSet{1, 2},
                                     IndexSet{3},          IndexSet{1, 3}, IndexSet{2, 3},
                                     IndexSet{1, 2, 3},    IndexSet{4}};
  CHECK(blocks == expect);
  CHECK(candidate_blocks(5, 5, 10).empty());
}

TEST_CASE("build_fs_fp pinned examples") {
  SUBCASE("ones against ideal(3)") {
    const auto set = parse_gaussian_set("ideal(3)");
    const auto result = build_fs_fp(gauss_ones(), set, 3);
    REQUIRE(result.found());
    const auto& sys = *result.system;
    CHECK(sys.blocks ==
          std::vector<IndexSet>{IndexSet{1, 2, 3}, IndexSet{4, 5, 6}, IndexSet{7, 8, 9}});
    CHECK(sys.terms == std::vector<GaussianInt>(3, GaussianInt{3, 0}));
    const auto report = verify_fs_fp(sys, set);
    CHECK(report.pass());
    CHECK(report.sums_checked == 7);
  }
  SUBCASE("full ring binds nothing") {
    const auto set = parse_gaussian_set("ideal(1)");
    const auto result = build_fs_fp(gauss_ones(), set, 3);
    REQUIRE(result.found());
    CHECK(result.system->blocks ==
          std::vector<IndexSet>{IndexSet{1}, IndexSet{2}, IndexSet{3}});
  }
  SUBCASE("ideal(1+i) forces size-2 blocks on the ones sequence") {
    const auto set = parse_gaussian_set("ideal(1+i)");
    const auto result = build_fs_fp(gauss_ones(), set, 2);
    REQUIRE(result.found());
    CHECK(result.system->terms == std::vector<GaussianInt>(2, GaussianInt{2, 0}));
    for (const auto& h : result.system->blocks) CHECK(h.size() == 2);
    CHECK(verify_fs_fp(*result.system, set).pass());
  }
  SUBCASE("depth beyond the cap") {
    CHECK_THROWS_AS(build_fs_fp(gauss_ones(), parse_gaussian_set("ideal(2)"), 9),
                    CapExceededError);
  }
  SUBCASE("impossible set reports not-found with best depth") {
    const auto set = parse_gaussian_set("!ideal(1)");  // empty set
    const auto result = build_fs_fp(gauss_ones(20), set, 2);
    CHECK_FALSE(result.found());
    CHECK(result.best_depth == 0);
  }
}

TEST_CASE("verify_fs_fp pinned examples") {
  const auto sys3 = BlockSystem<GaussianInt>{
      {IndexSet{1}, IndexSet{2}, IndexSet{3}},
      {GaussianInt{3, 0}, GaussianInt{3, 0}, GaussianInt{3, 0}}};
  CHECK(verify_fs_fp(sys3, parse_gaussian_set("ideal(3)")).pass());

  const auto sys1 =
      BlockSystem<GaussianInt>{{IndexSet{1}}, {GaussianInt{1, 0}}};
  const auto rep1 = verify_fs_fp(sys1, parse_gaussian_set("ideal(2)"));
  REQUIRE_FALSE(rep1.pass());
  CHECK(rep1.violations.front().kind == "fs");
  CHECK(rep1.violations.front().value == GaussianInt{1, 0});

  const auto sys2 = BlockSystem<GaussianInt>{
      {IndexSet{1}, IndexSet{2}}, {GaussianInt{2, 0}, GaussianInt{2, 0}}};
  const auto rep2 = verify_fs_fp(sys2, parse_gaussian_set("ideal(4)"));
  REQUIRE_FALSE(rep2.pass());
  bool product_four_violated = false;
  for (const auto& v : rep2.violations) {
    if (v.kind == "fp" && v.value == GaussianInt{4, 0}) product_four_violated = true;
  }
  CHECK_FALSE(product_four_violated);  // the full product 4 passes
}

TEST_CASE("build_fs_fp succeeds for rational-integer ideals on random input") {
  std::mt19937_64 rng(83);
  const auto set2 = parse_gaussian_set("ideal(2)");
  const auto set3 = parse_gaussian_set("ideal(3)");
  for (int trial = 0; trial < 100; ++trial) {
    const auto x = random_gauss_seq(rng, 200, 50);
    for (const auto* set : {&set2, &set3}) {
      const auto result = build_fs_fp(x, *set, 4);
      REQUIRE(result.found());
      REQUIRE(verify_fs_fp(*result.system, *set).pass());
      REQUIRE(strictly_ordered(result.system->blocks));
    }
  }
}

TEST_CASE("monotone soundness: truncations of a success verify") {
  std::mt19937_64 rng(89);
  const auto set = parse_gaussian_set("ideal(2+i)");
  for (int trial = 0; trial < 10; ++trial) {
    const auto x = random_gauss_seq(rng, 300, 30);
    const auto result = build_fs_fp(x, set, 5);
    REQUIRE(result.found());
    for (std::size_t d = 1; d <= 5; ++d) {
      BlockSystem<GaussianInt> trunc{
          {result.system->blocks.begin(), result.system->blocks.begin() + d},
          {result.system->terms.begin(), result.system->terms.begin() + d}};
      CHECK(verify_fs_fp(trunc, set).pass());
    }
  }
}

TEST_CASE("re-verification from scratch matches the builder's claim") {
  std::mt19937_64 rng(97);
  const auto set = parse_gaussian_set("ideal(1+i)");
  const auto x = random_gauss_seq(rng, 300, 20);
  const auto result = build_fs_fp(x, set, 5);
  REQUIRE(result.found());
  const auto sys = apply_blocks(x, result.system->blocks);  // recompute terms
  CHECK(sys.terms == result.system->terms);
  CHECK(verify_fs_fp(sys, set).pass());
}

TEST_CASE("parallel search returns the sequential certificate") {
  std::mt19937_64 rng(101);
  const auto set = parse_gaussian_set("ideal(3)");
  for (int trial = 0; trial < 5; ++trial) {
    const auto x = random_gauss_seq(rng, 200, 40);
    const auto sequential = build_fs_fp(x, set, 3);
    BuildBounds par;
    par.threads = 4;
    const auto parallel = build_fs_fp(x, set, 3, par);
    REQUIRE(sequential.found());
    REQUIRE(parallel.found());
    CHECK(sequential.system->blocks == parallel.system->blocks);
  }
}

TEST_CASE("build_fs_leftprod") {
  SUBCASE("ones against two-sided ideal(2)") {
    const auto set = parse_quaternion_set("ideal(2)");
    const auto result = build_fs_leftprod(quat_ones(), set, 3);
    REQUIRE(result.found());
    CHECK(result.system->terms == std::vector<LipschitzQuat>(3, LipschitzQuat{2, 0, 0, 0}));
    for (const auto& h : result.system->blocks) CHECK(h.size() == 2);
    CHECK(verify_fs_leftprod(*result.system, set).pass());
  }
  SUBCASE("full ring is unconstrained") {
    const auto set = parse_quaternion_set("ideal(1)");
    const auto result = build_fs_leftprod(quat_ones(), set, 3);
    REQUIRE(result.found());
    CHECK(result.system->blocks ==
          std::vector<IndexSet>{IndexSet{1}, IndexSet{2}, IndexSet{3}});
  }
  SUBCASE("depth 4 against ideal(3)") {
    const auto set = parse_quaternion_set("ideal(3)");
    const auto result = build_fs_leftprod(quat_ones(), set, 4);
    REQUIRE(result.found());
    CHECK(result.system->terms == std::vector<LipschitzQuat>(4, LipschitzQuat{3, 0, 0, 0}));
    const auto report = verify_fs_leftprod(*result.system, set);
    CHECK(report.pass());
    CHECK(report.sums_checked == 15);
  }
}

TEST_CASE("build_fs_ap") {
  SUBCASE("ones against ideal(2), AP fully inside") {
    const auto set = parse_quaternion_set("ideal(2)");
    const auto result = build_fs_ap(quat_ones(), set, 3);
    REQUIRE(result.found());
    CHECK(result.system->terms == std::vector<LipschitzQuat>(3, LipschitzQuat{2, 0, 0, 0}));
    const auto report = verify_fs_ap(*result.system, set);
    CHECK(report.pass());
    CHECK(report.products_checked == 15);  // ap expressions for k = 3
  }
  SUBCASE("depth 1 binds only the FS constraint") {
    const auto set = parse_quaternion_set("ideal(2)");
    const auto result = build_fs_ap(quat_ones(), set, 1);
    REQUIRE(result.found());
    CHECK(result.system->blocks == std::vector<IndexSet>{IndexSet{1, 2}});
    CHECK(verify_fs_ap(*result.system, set).pass());
  }
  SUBCASE("interleaved source forces backtracking over unit slots") {
    const auto ones = SequenceSource<Int>([](Index) { return Int(1); }, 200, "ones");
    const auto w = interleave_quaternion(ones);
    const auto set = parse_quaternion_set("ideal(2)");
    const auto result = build_fs_ap(w, set, 2);
    REQUIRE(result.found());
    CHECK(result.system->blocks.front() == IndexSet{1, 5});
    CHECK(verify_fs_ap(*result.system, set).pass());
  }
}

TEST_CASE("quaternion builders on random sequences against two-sided ideals") {
  std::mt19937_64 rng(103);
  std::uniform_int_distribution<long> d(-20, 20);
  const auto set2 = parse_quaternion_set("ideal(2)");
  const auto set3 = parse_quaternion_set("ideal(3)");
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<LipschitzQuat> values;
    for (int i = 0; i < 400; ++i) values.push_back(LipschitzQuat{d(rng), d(rng), d(rng), d(rng)});
    const auto y = SequenceSource<LipschitzQuat>::from_list(std::move(values));
    for (const auto* set : {&set2, &set3}) {
      const auto result = build_fs_ap(y, *set, 4);
      REQUIRE(result.found());
      const auto report = verify_fs_ap(*result.system, *set);
      REQUIRE(report.pass());
      REQUIRE(report.products_checked <= 64);
    }
  }
}
