#pragma once

#include <map>
#include <span>
#include <vector>

#include "ramsey/errors.hpp"
#include "ramsey/gaussian.hpp"
#include "ramsey/quaternion.hpp"
#include "ramsey/sequences.hpp"

namespace ramsey {

enum class ExtractStrategy {
  kPrefixSum,       // A: first contiguous block found by prefix-sum pigeonhole
  kEqualRemainder,  // B: the first residue class to collect norm(z) members
};

inline const char* strategy_name(ExtractStrategy s) {
  return s == ExtractStrategy::kPrefixSum ? "A" : "B";
}

/// Finds H with min H > m and z | sum of x over H.
///
/// Strategy A walks prefix sums S_0..S_C (C = number of congruence classes);
/// two of them share a remainder, and the indices between form a contiguous
/// block of size at most C. Strategy B collects indices by remainder until
/// some class holds norm(z) of them; norm(z) equal remainders sum into the
/// ideal because norm(z) = z * conj(z).
template <class T>
IndexSet extract_divisible_block(const SequenceSource<T>& x, const T& z, Index m,
                                 ExtractStrategy strategy = ExtractStrategy::kPrefixSum) {
  if (z.is_zero()) throw std::invalid_argument("extract_divisible_block: zero modulus");
  if (m < 0) throw std::invalid_argument("extract_divisible_block: negative start");

  if (strategy == ExtractStrategy::kPrefixSum) {
    const Index classes = coset_count(z).template convert_to<Index>();
    const Index window = std::min<Index>(classes, x.bound() - m);
    if (window < 1) {
      throw InsufficientSourceError("extract_divisible_block: no indices beyond " +
                                    std::to_string(m) + " in source '" + x.name() + "'");
    }
    std::vector<T> reps;  // canonical remainders of S_0..S_window
    reps.reserve(static_cast<std::size_t>(window) + 1);
    reps.push_back(T{});
    T prefix{};
    for (Index t = 1; t <= window; ++t) {
      prefix += x.at(m + t);
      reps.push_back(canonical_remainder(prefix, z));
    }
    // The earliest-starting divisible block [m+a+1 .. m+b]: least a whose
    // remainder recurs, then least such b.
    for (Index a = 0; a < window; ++a) {
      for (Index b = a + 1; b <= window; ++b) {
        if (reps[static_cast<std::size_t>(a)] == reps[static_cast<std::size_t>(b)]) {
          std::vector<Index> block;
          for (Index n = m + a + 1; n <= m + b; ++n) block.push_back(n);
          return IndexSet(std::move(block));
        }
      }
    }
    if (window < classes) {
      throw InsufficientSourceError(
          "extract_divisible_block: strategy A needs indices up to " +
          std::to_string(m + classes) + " but source '" + x.name() + "' ends at " +
          std::to_string(x.bound()));
    }
    throw std::logic_error("extract_divisible_block: pigeonhole failed");
  }

  const Index want = ring_norm(z).template convert_to<Index>();
  std::map<T, std::vector<Index>> classes;
  for (Index n = m + 1; n <= x.bound(); ++n) {
    auto& bucket = classes[canonical_remainder(x.at(n), z)];
    bucket.push_back(n);
    if (static_cast<Index>(bucket.size()) == want) return IndexSet(bucket);
  }
  throw InsufficientSourceError(
      "extract_divisible_block: strategy B exhausted source '" + x.name() +
      "' (bound " + std::to_string(x.bound()) + ") before any remainder class reached " +
      std::to_string(want) + " members");
}

/// Lemma-2.15 style: a union subsystem G_1..G_count of H_seq whose block sums
/// of f all land in the ideal of z. Follows the proof: pigeonhole on the
/// derived sequence x_n = sum of f over H_n, advancing m to max K_n.
template <class T>
std::vector<IndexSet> divisible_union_subsystem(
    const SequenceSource<T>& f, std::span<const IndexSet> h_seq, const T& z, Index count,
    ExtractStrategy strategy = ExtractStrategy::kPrefixSum) {
  if (z.is_zero()) throw std::invalid_argument("divisible_union_subsystem: zero modulus");
  if (count < 1) throw std::invalid_argument("divisible_union_subsystem: count must be >= 1");
  if (h_seq.empty() || !strictly_ordered(h_seq)) {
    throw std::invalid_argument("divisible_union_subsystem: H sequence invalid");
  }
  if (h_seq.back().max() > f.bound()) {
    throw std::out_of_range("divisible_union_subsystem: H blocks exceed source bound");
  }
  std::vector<IndexSet> h_blocks(h_seq.begin(), h_seq.end());
  SequenceSource<T> derived(
      [&f, h_blocks](Index n) { return f.sum_over(h_blocks[static_cast<std::size_t>(n - 1)]); },
      static_cast<Index>(h_blocks.size()), "block-sums(" + f.name() + ")");

  std::vector<IndexSet> selections;
  Index m = 0;
  for (Index n = 0; n < count; ++n) {
    try {
      selections.push_back(extract_divisible_block(derived, z, m, strategy));
    } catch (const InsufficientSourceError&) {
      throw InsufficientSourceError(
          "divisible_union_subsystem: insufficient blocks for round " +
          std::to_string(n + 1) + " of " + std::to_string(count));
    }
    m = selections.back().max();
  }
  return union_blocks(h_seq, selections);
}

/// Lemma-2.16 style: blocks K_1..K_count whose f-sums are divisible by z for
/// every f in the family at once, obtained by refining an identity block
/// system through each function in turn.
template <class T>
std::vector<IndexSet> common_divisible_blocks(
    std::span<const SequenceSource<T>> family, const T& z, Index count,
    ExtractStrategy strategy = ExtractStrategy::kPrefixSum) {
  if (family.empty()) throw std::invalid_argument("common_divisible_blocks: empty family");
  if (z.is_zero()) throw std::invalid_argument("common_divisible_blocks: zero modulus");

  Index base = family.front().bound();
  for (const auto& f : family) base = std::min(base, f.bound());
  std::vector<IndexSet> system;
  system.reserve(static_cast<std::size_t>(base));
  for (Index n = 1; n <= base; ++n) system.push_back(IndexSet{n});

  for (const auto& f : family) {
    std::vector<IndexSet> blocks(system.begin(), system.end());
    SequenceSource<T> derived(
        [&f, blocks](Index n) { return f.sum_over(blocks[static_cast<std::size_t>(n - 1)]); },
        static_cast<Index>(blocks.size()), "block-sums(" + f.name() + ")");
    std::vector<IndexSet> selections;
    Index m = 0;
    for (;;) {
      try {
        selections.push_back(extract_divisible_block(derived, z, m, strategy));
      } catch (const InsufficientSourceError&) {
        break;  // refined as far as this level allows
      }
      m = selections.back().max();
    }
    if (selections.empty()) {
      throw InsufficientSourceError(
          "common_divisible_blocks: sources too short to refine for '" + f.name() + "'");
    }
    system = union_blocks(system, selections);
  }
  if (static_cast<Index>(system.size()) < count) {
    throw InsufficientSourceError(
        "common_divisible_blocks: only " + std::to_string(system.size()) +
        " blocks survive refinement, " + std::to_string(count) + " requested");
  }
  system.erase(system.begin() + static_cast<std::ptrdiff_t>(count), system.end());
  return system;
}

}  // namespace ramsey
