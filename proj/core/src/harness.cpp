#include "ramsey/harness.hpp"

#include <algorithm>
#include <stdexcept>

namespace ramsey {

namespace {

bool has_mono_schur_triple(const std::vector<int>& color) {
  const int n = static_cast<int>(color.size());
  for (int x = 1; x <= n; ++x) {
    for (int y = x; x + y <= n; ++y) {
      if (color[x - 1] == color[y - 1] && color[y - 1] == color[x + y - 1]) return true;
    }
  }
  return false;
}

}  // namespace

SchurReport schur_search(int n, int colors, unsigned long long cap) {
  if (n < 1) throw std::invalid_argument("schur_search: n must be >= 1");
  if (colors < 2 || colors > 4) throw std::invalid_argument("schur_search: 2..4 colors");
  unsigned long long space = 1;
  for (int i = 0; i < n; ++i) {
    if (space > cap / static_cast<unsigned long long>(colors)) {
      throw CapExceededError("schur_search: colors^n exceeds enumeration cap " +
                             std::to_string(cap));
    }
    space *= static_cast<unsigned long long>(colors);
  }

  SchurReport report;
  report.n = n;
  report.colors = colors;
  std::vector<int> assign(static_cast<std::size_t>(n), 0);
  unsigned long long reduced = space / static_cast<unsigned long long>(colors);
  for (unsigned long long code = 0; code < reduced; ++code) {
    unsigned long long rest = code;
    for (int i = 1; i < n; ++i) {  // element 1 keeps color 0
      assign[static_cast<std::size_t>(i)] = static_cast<int>(rest % colors);
      rest /= static_cast<unsigned long long>(colors);
    }
    ++report.colorings_checked;
    if (!has_mono_schur_triple(assign)) {
      report.forced = false;
      report.avoiding = assign;
      return report;
    }
  }
  report.forced = true;
  return report;
}

PsPpReport pspp_check(const std::vector<Int>& terms, const std::function<int(const Int&)>& color,
                      const Int& domain_max) {
  if (terms.size() < 2) throw std::invalid_argument("pspp_check: needs at least two terms");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    for (std::size_t j = i + 1; j < terms.size(); ++j) {
      if (terms[i] == terms[j]) {
        throw std::invalid_argument("pspp_check: repeated term, sequence must be one-to-one");
      }
    }
  }
  const auto ps_values = ps(std::span<const Int>(terms));
  const auto pp_values = pp(std::span<const Int>(terms));
  PsPpReport report;
  auto record = [&](const std::vector<Int>& values,
                    std::vector<std::pair<Int, int>>& sink) {
    for (const Int& v : values) {
      if (v < 1 || v > domain_max) {
        throw std::out_of_range("pspp_check: value " + v.str() +
                                " outside the coloring domain");
      }
      sink.emplace_back(v, color(v));
    }
  };
  record(ps_values, report.ps_colors);
  record(pp_values, report.pp_colors);
  report.color = report.ps_colors.front().second;
  report.monochromatic = true;
  for (const auto& [v, c] : report.ps_colors) {
    if (c != report.color) report.monochromatic = false;
  }
  for (const auto& [v, c] : report.pp_colors) {
    if (c != report.color) report.monochromatic = false;
  }
  return report;
}

std::function<int(const Int&)> constant_coloring() {
  return [](const Int&) { return 0; };
}

std::function<int(const Int&)> parity_coloring() {
  return [](const Int& v) { return static_cast<int>((v % 2 + 2) % 2); };
}

std::function<int(const Int&)> residue_coloring(Int modulus) {
  if (modulus < 2) throw std::invalid_argument("residue_coloring: modulus must be >= 2");
  return [m = std::move(modulus)](const Int& v) {
    return static_cast<int>(((v % m + m) % m).convert_to<long>());
  };
}

std::function<int(const Int&)> seeded_random_coloring(unsigned long long seed, int colors) {
  if (colors < 1) throw std::invalid_argument("seeded_random_coloring: colors must be >= 1");
  return [seed, colors](const Int& v) {
    // splitmix64 over (seed, v); stable per value across runs
    unsigned long long x = seed ^ (v.convert_to<long long>() * 0x9e3779b97f4a7c15ull);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ull;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebull;
    x ^= x >> 31;
    return static_cast<int>(x % static_cast<unsigned long long>(colors));
  };
}

std::function<int(const GaussianInt&)> gaussian_residue_coloring(GaussianInt z) {
  const auto reps = gi_coset_reps(z);
  return [z = std::move(z), reps](const GaussianInt& v) {
    const auto r = canonical_remainder(v, z);
    const auto it = std::lower_bound(reps.begin(), reps.end(), r);
    return static_cast<int>(it - reps.begin());
  };
}

}  // namespace ramsey
