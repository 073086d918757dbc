#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <vector>

#include "ramsey/errors.hpp"
#include "ramsey/gaussian.hpp"
#include "ramsey/quaternion.hpp"
#include "ramsey/sequences.hpp"

namespace ramsey {

inline constexpr std::size_t kFsCap = 20;
inline constexpr std::size_t kApCap = 6;

namespace detail {
inline void require_terms(std::size_t n, std::size_t cap, const char* who) {
  if (n == 0) throw std::invalid_argument(std::string(who) + ": needs at least one term");
  if (n > cap) {
    throw CapExceededError(std::string(who) + ": " + std::to_string(n) +
                           " terms exceed cap " + std::to_string(cap));
  }
}
}  // namespace detail

/// FS: the set of sums over all nonempty index subsets, as a sorted value set.
template <class T>
std::vector<T> fs(std::span<const T> terms, std::size_t cap = kFsCap) {
  detail::require_terms(terms.size(), cap, "fs");
  std::set<T> values;
  std::vector<T> sums;  // one sum per nonempty subset seen so far
  for (const T& t : terms) {
    std::vector<T> grown;
    grown.reserve(sums.size() + 1);
    grown.push_back(t);
    for (const T& s : sums) grown.push_back(s + t);
    for (const T& s : grown) {
      values.insert(s);
      sums.push_back(s);
    }
  }
  return {values.begin(), values.end()};
}

/// FP: products over nonempty subsets, factors in increasing index order.
template <class T>
std::vector<T> fp(std::span<const T> terms, std::size_t cap = kFsCap) {
  detail::require_terms(terms.size(), cap, "fp");
  std::set<T> values;
  std::vector<T> prods;
  for (const T& t : terms) {
    std::vector<T> grown;
    grown.push_back(t);
    for (const T& p : prods) grown.push_back(p * t);
    for (const T& p : grown) {
      values.insert(p);
      prods.push_back(p);
    }
  }
  return {values.begin(), values.end()};
}

template <class T>
struct ApEnumeration {
  std::vector<T> values;             // sorted, duplicate-free
  std::uint64_t expressions = 0;     // ordered product expressions evaluated
};

/// Number of ordered products of distinct terms: sum over j of k!/(k-j)!.
std::uint64_t ap_expression_count(std::size_t k);

/// AP: values of all products of distinct-index terms, in every order, over
/// every nonempty subset. Single terms and partial products are included.
template <class T>
ApEnumeration<T> ap_enumerate(std::span<const T> terms, std::size_t cap = kApCap) {
  detail::require_terms(terms.size(), cap, "ap");
  ApEnumeration<T> out;
  std::set<T> values;
  const std::size_t k = terms.size();
  std::vector<bool> used(k, false);
  std::vector<T> stack;
  auto extend = [&](auto&& self, const T& prefix) -> void {
    for (std::size_t i = 0; i < k; ++i) {
      if (used[i]) continue;
      used[i] = true;
      T value = prefix * terms[i];
      ++out.expressions;
      values.insert(value);
      self(self, value);
      used[i] = false;
    }
  };
  for (std::size_t i = 0; i < k; ++i) {
    used[i] = true;
    ++out.expressions;
    values.insert(terms[i]);
    extend(extend, terms[i]);
    used[i] = false;
  }
  out.values.assign(values.begin(), values.end());
  return out;
}

template <class T>
std::vector<T> ap(std::span<const T> terms, std::size_t cap = kApCap) {
  return ap_enumerate(terms, cap).values;
}

/// PS: pairwise sums x_m + x_n over distinct indices.
template <class T>
std::vector<T> ps(std::span<const T> terms) {
  if (terms.size() < 2) throw std::invalid_argument("ps: needs at least two terms");
  std::set<T> values;
  for (std::size_t m = 0; m < terms.size(); ++m) {
    for (std::size_t n = m + 1; n < terms.size(); ++n) values.insert(terms[m] + terms[n]);
  }
  return {values.begin(), values.end()};
}

/// PP: pairwise products over distinct indices, both orders (they differ in L).
template <class T>
std::vector<T> pp(std::span<const T> terms) {
  if (terms.size() < 2) throw std::invalid_argument("pp: needs at least two terms");
  std::set<T> values;
  for (std::size_t m = 0; m < terms.size(); ++m) {
    for (std::size_t n = 0; n < terms.size(); ++n) {
      if (m != n) values.insert(terms[m] * terms[n]);
    }
  }
  return {values.begin(), values.end()};
}

/// z_1, z_2, ... = x_1, i*x_1, x_2, i*x_2, ...; FS of the first 2k terms
/// covers a + b*i for all a, b in FS of the first k integer terms.
SequenceSource<GaussianInt> interleave_gaussian(const SequenceSource<Int>& x);

/// w over 1, i, j, k in turn: the 4-way analogue for L.
SequenceSource<LipschitzQuat> interleave_quaternion(const SequenceSource<Int>& x);

}  // namespace ramsey
