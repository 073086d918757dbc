#include "doctest.h"
#include "ramsey/harness.hpp"

using namespace ramsey;

namespace {

std::vector<Int> interval(long lo, long hi) {
  std::vector<Int> out;
  for (long v = lo; v <= hi; ++v) out.push_back(Int(v));
  return out;
}

}  // namespace

TEST_CASE("schur_search pinned decisions") {
  const auto at4 = schur_search(4, 2);
  CHECK_FALSE(at4.forced);
  CHECK(at4.avoiding == std::vector<int>{0, 1, 1, 0});

  const auto at5 = schur_search(5, 2);
  CHECK(at5.forced);
  CHECK(at5.colorings_checked == 16);  // 2^5 halved by pinning the color of 1

  CHECK_FALSE(schur_search(1, 2).forced);  // no triple fits

  CHECK_THROWS_AS(schur_search(40, 2), CapExceededError);
  CHECK_THROWS_AS(schur_search(3, 5), std::invalid_argument);
  CHECK_THROWS_AS(schur_search(3, 1), std::invalid_argument);
}

TEST_CASE("schur_search honors a custom cap") {
  CHECK_THROWS_AS(schur_search(5, 2, 16), CapExceededError);
  CHECK(schur_search(4, 2, 16).forced == false);
}

TEST_CASE("hindman_search pinned examples") {
  SUBCASE("constant coloring on [1..7]") {
    const auto w = hindman_search<Int>(interval(1, 7), constant_coloring(), 3);
    REQUIRE(w.has_value());
    CHECK(w->terms == std::vector<Int>{1, 2, 4});
    CHECK(w->fs_values == interval(1, 7));
  }
  SUBCASE("parity coloring lands on even terms with even sums") {
    const auto w = hindman_search<Int>(interval(1, 100), parity_coloring(), 3);
    REQUIRE(w.has_value());
    CHECK(w->terms == std::vector<Int>{2, 4, 8});
    for (const auto& v : w->fs_values) CHECK(v % 2 == 0);
  }
  SUBCASE("k = 1 takes the least element") {
    const auto w = hindman_search<Int>(interval(1, 10), parity_coloring(), 1);
    REQUIRE(w.has_value());
    CHECK(w->terms == std::vector<Int>{1});
  }
  SUBCASE("witnesses re-verify through fs and the coloring") {
    const auto color = residue_coloring(3);
    const auto w = hindman_search<Int>(interval(1, 200), color, 3);
    REQUIRE(w.has_value());
    const auto recomputed = fs(std::span<const Int>(w->terms));
    CHECK(recomputed == w->fs_values);
    for (const auto& v : recomputed) CHECK(color(v) == w->color);
  }
  SUBCASE("not found on a too-small domain") {
    CHECK_FALSE(hindman_search<Int>(interval(1, 3), constant_coloring(), 3).has_value());
  }
  SUBCASE("bad arguments") {
    CHECK_THROWS_AS(hindman_search<Int>(interval(1, 5), constant_coloring(), 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(hindman_search<Int>({}, constant_coloring(), 1), std::invalid_argument);
  }
}

TEST_CASE("gaussian hindman witness over a box") {
  const auto domain = gaussian_box(4);
  const auto color = gaussian_residue_coloring(GaussianInt{1, 1});
  const auto w = hindman_search<GaussianInt>(domain, color, 2);
  REQUIRE(w.has_value());
  const auto values = fs(std::span<const GaussianInt>(w->terms));
  for (const auto& v : values) CHECK(color(v) == w->color);
}

TEST_CASE("pspp_check") {
  SUBCASE("constant coloring is monochromatic") {
    const auto r = pspp_check({2, 4}, constant_coloring(), Int(100));
    CHECK(r.monochromatic);
    CHECK(r.ps_colors.size() == 1);  // PS = {6}
    CHECK(r.pp_colors.size() == 1);  // PP = {8}
  }
  SUBCASE("parity keeps 2,4 together and splits 1,2") {
    CHECK(pspp_check({2, 4}, parity_coloring(), Int(100)).monochromatic);
    const auto r = pspp_check({1, 2}, parity_coloring(), Int(100));
    CHECK_FALSE(r.monochromatic);
  }
  SUBCASE("repeated terms are rejected") {
    CHECK_THROWS_AS(pspp_check({2, 2}, constant_coloring(), Int(100)), std::invalid_argument);
  }
  SUBCASE("values must stay inside the domain") {
    CHECK_THROWS_AS(pspp_check({50, 60}, constant_coloring(), Int(100)), std::out_of_range);
  }
}

TEST_CASE("seeded random coloring is stable per value") {
  const auto a = seeded_random_coloring(42, 3);
  const auto b = seeded_random_coloring(42, 3);
  for (long v = 1; v <= 50; ++v) {
    CHECK(a(Int(v)) == b(Int(v)));
    CHECK(a(Int(v)) >= 0);
    CHECK(a(Int(v)) < 3);
  }
}
