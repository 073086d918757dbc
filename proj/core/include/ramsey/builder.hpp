#pragma once

#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "ramsey/configs.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/sequences.hpp"
#include "ramsey/set_algebra.hpp"

namespace ramsey {

struct BuildBounds {
  int depth_cap = 8;
  int blocks_per_level = 500;   // candidate blocks enumerated per level
  long long backtracks = 10000; // restores before giving up
  int threads = 1;              // >1 splits the top-level candidate list
};

template <class T>
struct BuildResult {
  std::optional<BlockSystem<T>> system;
  int best_depth = 0;
  long long backtracks_used = 0;
  bool found() const { return system.has_value(); }
};

/// Candidate blocks H with min H > start and max H <= limit, enumerated in
/// (max index, cardinality, lexicographic) order, at most cap of them.
std::vector<IndexSet> candidate_blocks(Index start, Index limit, int cap);

namespace detail {

template <class T, class Policy>
class GreedySearch {
 public:
  GreedySearch(const SequenceSource<T>& x, int depth, const BuildBounds& bounds,
               const Policy& policy)
      : x_(x), depth_(depth), bounds_(bounds), policy_(policy) {}

  BuildResult<T> run() {
    BuildResult<T> result;
    if (dfs(policy_.initial(), 0)) {
      result.system = BlockSystem<T>{blocks_, terms_};
    }
    result.best_depth = best_;
    result.backtracks_used = restores_;
    return result;
  }

  // Runs the search with the first level pinned to one candidate; used by
  // the parallel top-level split.
  BuildResult<T> run_pinned(const IndexSet& top) {
    BuildResult<T> result;
    const T y = x_.sum_over(top);
    auto state = policy_.initial();
    if (policy_.admits(state, y)) {
      blocks_.push_back(top);
      terms_.push_back(y);
      best_ = 1;
      if (dfs(policy_.extend(state, y), top.max())) {
        result.system = BlockSystem<T>{blocks_, terms_};
      }
    }
    result.best_depth = best_;
    result.backtracks_used = restores_;
    return result;
  }

 private:
  bool dfs(const typename Policy::State& state, Index prev_max) {
    if (static_cast<int>(blocks_.size()) == depth_) return true;
    for (const IndexSet& cand :
         candidate_blocks(prev_max, x_.bound(), bounds_.blocks_per_level)) {
      if (restores_ > bounds_.backtracks) return false;
      const T y = x_.sum_over(cand);
      if (!policy_.admits(state, y)) continue;
      blocks_.push_back(cand);
      terms_.push_back(y);
      best_ = std::max(best_, static_cast<int>(blocks_.size()));
      if (dfs(policy_.extend(state, y), cand.max())) return true;
      blocks_.pop_back();
      terms_.pop_back();
      ++restores_;
    }
    return false;
  }

  const SequenceSource<T>& x_;
  int depth_;
  BuildBounds bounds_;
  const Policy& policy_;
  std::vector<IndexSet> blocks_;
  std::vector<T> terms_;
  long long restores_ = 0;
  int best_ = 0;
};

template <class T, class Policy>
BuildResult<T> run_search(const SequenceSource<T>& x, int depth, const BuildBounds& bounds,
                          const Policy& policy) {
  if (depth < 1) throw std::invalid_argument("build: depth must be >= 1");
  if (depth > bounds.depth_cap) {
    throw CapExceededError("build: depth " + std::to_string(depth) + " exceeds cap " +
                           std::to_string(bounds.depth_cap));
  }
  if (bounds.threads <= 1) {
    return GreedySearch<T, Policy>(x, depth, bounds, policy).run();
  }
  // Split the top-level candidates across workers; the winner is the success
  // of least candidate rank, which matches the sequential answer.
  const auto tops = candidate_blocks(0, x.bound(), bounds.blocks_per_level);
  std::vector<BuildResult<T>> results(tops.size());
  std::vector<std::thread> pool;
  const int workers = std::min<int>(bounds.threads, static_cast<int>(tops.size()));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      for (std::size_t r = static_cast<std::size_t>(w); r < tops.size();
           r += static_cast<std::size_t>(workers)) {
        GreedySearch<T, Policy> search(x, depth, bounds, policy);
        results[r] = search.run_pinned(tops[r]);
      }
    });
  }
  for (auto& t : pool) t.join();
  BuildResult<T> merged;
  for (auto& r : results) {
    merged.best_depth = std::max(merged.best_depth, r.best_depth);
    merged.backtracks_used += r.backtracks_used;
    if (r.found() && !merged.found()) {
      merged.system = std::move(r.system);
      merged.best_depth = depth;
    }
  }
  return merged;
}

// Sum subsystem whose FS and FP both stay inside the set: the candidate term
// y must itself be a member, keep every extended sum s + y a member, and keep
// every extended product s * y a member.
template <class T>
struct FsFpPolicy {
  const SetDescription<T>& set;

  struct State {
    std::set<T> sums;
    std::set<T> prods;
  };

  State initial() const { return {}; }

  bool admits(const State& st, const T& y) const {
    if (!set.contains(y)) return false;
    for (const T& s : st.sums) {
      if (!set.contains(s + y)) return false;
    }
    for (const T& s : st.prods) {
      if (!set.contains(s * y)) return false;
    }
    return true;
  }

  State extend(const State& st, const T& y) const {
    State next = st;
    next.sums.insert(y);
    for (const T& s : st.sums) next.sums.insert(s + y);
    next.prods.insert(y);
    for (const T& s : st.prods) next.prods.insert(s * y);
    return next;
  }
};

// Shared state for the quaternion builders: chosen terms, the suffix-sum
// sets SS_m = { sums over F with min F >= m }, and AP of each prefix.
template <class T>
struct ProductState {
  std::vector<T> terms;
  std::vector<std::set<T>> suffix_sums;    // [j] holds SS_{j+1}
  std::vector<std::vector<T>> ap_prefix;   // [j] holds AP(x_1..x_{j+1})

  ProductState extended(const T& w) const {
    ProductState next = *this;
    for (auto& ss : next.suffix_sums) {
      std::vector<T> fresh(ss.begin(), ss.end());
      ss.insert(w);
      for (const T& s : fresh) ss.insert(s + w);
    }
    next.suffix_sums.push_back({w});
    next.terms.push_back(w);
    next.ap_prefix.push_back(
        ap(std::span<const T>(next.terms), next.terms.size()));
    return next;
  }
};

// New sums u containing the candidate w with min index >= m are u = w and
// u = s + w for s in SS_m; visit() sees each with the AP of the prefix below m.
template <class T, class Fn>
bool for_each_product_constraint(const ProductState<T>& st, const T& w, Fn&& visit) {
  const std::size_t n = st.terms.size();
  for (std::size_t m = 2; m <= n + 1; ++m) {
    const std::vector<T>& apv = st.ap_prefix[m - 2];
    if (!visit(apv, w)) return false;
    if (m <= n) {
      for (const T& s : st.suffix_sums[m - 1]) {
        if (!visit(apv, s + w)) return false;
      }
    }
  }
  return true;
}

template <class T>
struct LeftProdPolicy {
  const SetDescription<T>& set;
  using State = ProductState<T>;

  State initial() const { return {}; }

  bool admits(const State& st, const T& w) const {
    if (!set.contains(w)) return false;
    if (!st.suffix_sums.empty()) {
      for (const T& s : st.suffix_sums[0]) {
        if (!set.contains(s + w)) return false;
      }
    }
    return for_each_product_constraint(st, w, [&](const std::vector<T>& apv, const T& u) {
      for (const T& b : apv) {
        if (!set.contains(b * u)) return false;
      }
      return true;
    });
  }

  State extend(const State& st, const T& w) const { return st.extended(w); }
};

template <class T>
struct FsApPolicy {
  const SetDescription<T>& set;
  using State = ProductState<T>;

  State initial() const { return {}; }

  bool admits(const State& st, const T& w) const {
    if (!set.contains(w)) return false;
    if (!st.suffix_sums.empty()) {
      for (const T& s : st.suffix_sums[0]) {
        if (!set.contains(s + w)) return false;
      }
    }
    return for_each_product_constraint(st, w, [&](const std::vector<T>& apv, const T& u) {
      for (const T& a : apv) {
        if (!set.contains(a * u)) return false;
        if (!set.contains(u * a)) return false;
        for (const T& b : apv) {
          if (!set.contains(a * u * b)) return false;
        }
      }
      return true;
    });
  }

  State extend(const State& st, const T& w) const { return st.extended(w); }
};

}  // namespace detail

/// Greedy backtracking realization of the FS u FP construction: on success
/// the returned system is a sum subsystem of x whose finite sums and finite
/// products all satisfy the set description.
template <class T>
BuildResult<T> build_fs_fp(const SequenceSource<T>& x, const SetDescription<T>& set,
                           int depth, const BuildBounds& bounds = {}) {
  return detail::run_search(x, depth, bounds, detail::FsFpPolicy<T>{set});
}

/// Quaternion construction with left-product constraints: every b * s with
/// b in AP of a prefix and s a later suffix sum stays in the set, FS included.
inline BuildResult<LipschitzQuat> build_fs_leftprod(const SequenceSource<LipschitzQuat>& y,
                                                    const SetDescription<LipschitzQuat>& set,
                                                    int depth, const BuildBounds& bounds = {}) {
  return detail::run_search(y, depth, bounds, detail::LeftProdPolicy<LipschitzQuat>{set});
}

/// Quaternion construction with left, right and two-sided product
/// constraints; on success FS and the full AP value set lie in the set.
inline BuildResult<LipschitzQuat> build_fs_ap(const SequenceSource<LipschitzQuat>& y,
                                              const SetDescription<LipschitzQuat>& set,
                                              int depth, const BuildBounds& bounds = {}) {
  return detail::run_search(y, depth, bounds, detail::FsApPolicy<LipschitzQuat>{set});
}

template <class T>
struct Violation {
  std::string kind;  // "fs", "fp", "ap", "leftprod"
  T value;
};

template <class T>
struct VerifyReport {
  std::vector<Violation<T>> violations;
  std::size_t sums_checked = 0;
  std::size_t products_checked = 0;
  bool pass() const { return violations.empty(); }
};

/// Exhaustive re-check of FS and FP membership over all 2^k - 1 subsets,
/// enumerated directly from the terms (independent of the builder's
/// incremental bookkeeping).
template <class T>
VerifyReport<T> verify_fs_fp(const BlockSystem<T>& sys, const SetDescription<T>& set) {
  VerifyReport<T> report;
  const std::size_t k = sys.terms.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
    T sum{};
    T prod{1};
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (std::size_t{1} << i)) {
        sum += sys.terms[i];
        prod = prod * sys.terms[i];
      }
    }
    ++report.sums_checked;
    if (!set.contains(sum)) report.violations.push_back({"fs", sum});
    ++report.products_checked;
    if (!set.contains(prod)) report.violations.push_back({"fp", prod});
  }
  return report;
}

/// FS membership plus the left-product form: b * (sum over F with
/// min F >= m) for every b in AP of the prefix below m.
template <class T>
VerifyReport<T> verify_fs_leftprod(const BlockSystem<T>& sys, const SetDescription<T>& set) {
  VerifyReport<T> report;
  const std::size_t k = sys.terms.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
    T sum{};
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (std::size_t{1} << i)) sum += sys.terms[i];
    }
    ++report.sums_checked;
    if (!set.contains(sum)) report.violations.push_back({"fs", sum});
  }
  for (std::size_t m = 2; m <= k; ++m) {
    std::span<const T> prefix(sys.terms.data(), m - 1);
    const auto apv = ap(prefix, prefix.size());
    const std::size_t tail = k - m + 1;
    for (std::size_t mask = 1; mask < (std::size_t{1} << tail); ++mask) {
      T sum{};
      for (std::size_t i = 0; i < tail; ++i) {
        if (mask & (std::size_t{1} << i)) sum += sys.terms[m - 1 + i];
      }
      for (const T& b : apv) {
        ++report.products_checked;
        T value = b * sum;
        if (!set.contains(value)) report.violations.push_back({"leftprod", value});
      }
    }
  }
  return report;
}

/// FS membership plus every AP product expression.
template <class T>
VerifyReport<T> verify_fs_ap(const BlockSystem<T>& sys, const SetDescription<T>& set) {
  VerifyReport<T> report;
  const std::size_t k = sys.terms.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
    T sum{};
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (std::size_t{1} << i)) sum += sys.terms[i];
    }
    ++report.sums_checked;
    if (!set.contains(sum)) report.violations.push_back({"fs", sum});
  }
  const auto enumeration = ap_enumerate(std::span<const T>(sys.terms), k);
  report.products_checked = enumeration.expressions;
  for (const T& value : enumeration.values) {
    if (!set.contains(value)) report.violations.push_back({"ap", value});
  }
  return report;
}

}  // namespace ramsey
