#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ramsey/configs.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/gaussian.hpp"

namespace ramsey {

inline constexpr unsigned long long kDefaultEnumCap = 1ull << 24;

struct SchurReport {
  int n = 0;
  int colors = 0;
  bool forced = false;
  std::vector<int> avoiding;  // colors of 1..n when not forced
  unsigned long long colorings_checked = 0;
};

/// Decides whether every coloring of {1..n} with the given palette contains a
/// monochromatic {x, y, x+y} (x = y allowed). Enumeration is colexicographic
/// with the color of 1 pinned, which is sound up to palette relabeling.
SchurReport schur_search(int n, int colors, unsigned long long cap = kDefaultEnumCap);

template <class T>
struct HindmanResult {
  std::vector<T> terms;
  int color = 0;
  std::vector<T> fs_values;
};

/// First (in index order over the sorted domain) k-term witness whose full
/// FS is monochromatic, stays inside the domain, and has all 2^k - 1 subset
/// sums pairwise distinct.
template <class T>
std::optional<HindmanResult<T>> hindman_search(const std::vector<T>& domain,
                                               const std::function<int(const T&)>& color,
                                               int k) {
  if (k < 1) throw std::invalid_argument("hindman_search: k must be >= 1");
  if (domain.empty()) throw std::invalid_argument("hindman_search: empty domain");
  const std::set<T> inside(domain.begin(), domain.end());

  std::vector<T> terms;
  std::vector<T> sums;  // all subset sums of `terms`, kept distinct
  std::set<T> sum_set;
  int witness_color = 0;

  auto dfs = [&](auto&& self, std::size_t next) -> bool {
    if (static_cast<int>(terms.size()) == k) return true;
    for (std::size_t i = next; i < domain.size(); ++i) {
      const T& v = domain[i];
      std::vector<T> fresh;
      fresh.push_back(v);
      for (const T& s : sums) fresh.push_back(s + v);
      bool ok = true;
      std::set<T> fresh_set;
      for (const T& s : fresh) {
        if (!inside.count(s) || sum_set.count(s) || !fresh_set.insert(s).second ||
            color(s) != (terms.empty() ? color(v) : witness_color)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      if (terms.empty()) witness_color = color(v);
      terms.push_back(v);
      for (const T& s : fresh) {
        sums.push_back(s);
        sum_set.insert(s);
      }
      if (self(self, i + 1)) return true;
      terms.pop_back();
      for (const T& s : fresh) {
        sums.pop_back();
        sum_set.erase(s);
      }
    }
    return false;
  };

  if (!dfs(dfs, 0)) return std::nullopt;
  HindmanResult<T> result;
  result.terms = terms;
  result.color = witness_color;
  std::set<T> ordered(sums.begin(), sums.end());
  result.fs_values.assign(ordered.begin(), ordered.end());
  return result;
}

struct PsPpReport {
  bool monochromatic = false;
  int color = 0;  // meaningful when monochromatic
  std::vector<std::pair<Int, int>> ps_colors;
  std::vector<std::pair<Int, int>> pp_colors;
};

/// Reports whether PS(terms) u PP(terms) is monochromatic under the coloring
/// of [1..domain_max]. Terms must be pairwise distinct and every PS/PP value
/// must fall inside the domain.
PsPpReport pspp_check(const std::vector<Int>& terms, const std::function<int(const Int&)>& color,
                      const Int& domain_max);

/// Built-in coloring families over the rational integers.
std::function<int(const Int&)> constant_coloring();
std::function<int(const Int&)> parity_coloring();
std::function<int(const Int&)> residue_coloring(Int modulus);
std::function<int(const Int&)> seeded_random_coloring(unsigned long long seed, int colors);
/// Gaussian residue-class coloring: the rank of the canonical coset
/// representative modulo z.
std::function<int(const GaussianInt&)> gaussian_residue_coloring(GaussianInt z);

}  // namespace ramsey
