#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ramsey {

using Index = std::int64_t;

/// A nonempty finite set of positive integers, kept strictly increasing.
class IndexSet {
 public:
  explicit IndexSet(std::vector<Index> indices) : idx_(std::move(indices)) {
    if (idx_.empty()) throw std::invalid_argument("IndexSet: empty");
    std::sort(idx_.begin(), idx_.end());
    if (idx_.front() < 1) throw std::invalid_argument("IndexSet: indices must be positive");
    if (std::adjacent_find(idx_.begin(), idx_.end()) != idx_.end()) {
      throw std::invalid_argument("IndexSet: duplicate index");
    }
  }
  IndexSet(std::initializer_list<Index> indices) : IndexSet(std::vector<Index>(indices)) {}

  Index min() const { return idx_.front(); }
  Index max() const { return idx_.back(); }
  std::size_t size() const { return idx_.size(); }
  auto begin() const { return idx_.begin(); }
  auto end() const { return idx_.end(); }
  const std::vector<Index>& indices() const { return idx_; }

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
  friend bool operator<(const IndexSet& x, const IndexSet& y) { return x.idx_ < y.idx_; }

 private:
  std::vector<Index> idx_;
};

/// max H_n < min H_{n+1} for consecutive blocks.
inline bool strictly_ordered(std::span<const IndexSet> blocks) {
  for (std::size_t n = 1; n < blocks.size(); ++n) {
    if (blocks[n - 1].max() >= blocks[n].min()) return false;
  }
  return true;
}

/// A sequence x_1, x_2, ... either held as an explicit list or given by an
/// index rule with a declared evaluation bound. Evaluation past the bound
/// fails loudly instead of extrapolating.
template <class T>
class SequenceSource {
 public:
  SequenceSource(std::function<T(Index)> rule, Index bound, std::string name = "rule")
      : rule_(std::move(rule)), bound_(bound), name_(std::move(name)) {
    if (bound_ < 1) throw std::invalid_argument("SequenceSource: bound must be >= 1");
  }

  static SequenceSource from_list(std::vector<T> values, std::string name = "list") {
    if (values.empty()) throw std::invalid_argument("SequenceSource: empty list");
    const Index bound = static_cast<Index>(values.size());
    auto data = std::make_shared<std::vector<T>>(std::move(values));
    return SequenceSource(
        [data](Index n) { return (*data)[static_cast<std::size_t>(n - 1)]; }, bound,
        std::move(name));
  }

  T at(Index n) const {
    if (n < 1 || n > bound_) {
      throw std::out_of_range("SequenceSource '" + name_ + "': index " + std::to_string(n) +
                              " outside [1, " + std::to_string(bound_) + "]");
    }
    return rule_(n);
  }

  Index bound() const { return bound_; }
  const std::string& name() const { return name_; }

  T sum_over(const IndexSet& block) const {
    T total{};
    for (Index t : block) total += at(t);
    return total;
  }

 private:
  std::function<T(Index)> rule_;
  Index bound_;
  std::string name_;
};

/// Blocks H_n with max H_n < min H_{n+1}, together with the derived terms
/// y_n = sum of the source over H_n.
template <class T>
struct BlockSystem {
  std::vector<IndexSet> blocks;
  std::vector<T> terms;
};

template <class T>
BlockSystem<T> apply_blocks(const SequenceSource<T>& x, std::vector<IndexSet> blocks) {
  if (blocks.empty()) throw std::invalid_argument("apply_blocks: no blocks");
  if (!strictly_ordered(blocks)) {
    throw std::invalid_argument("apply_blocks: blocks violate max H_n < min H_{n+1}");
  }
  if (blocks.back().max() > x.bound()) {
    throw std::out_of_range("apply_blocks: block index exceeds source bound");
  }
  BlockSystem<T> sys;
  sys.terms.reserve(blocks.size());
  for (const IndexSet& h : blocks) sys.terms.push_back(x.sum_over(h));
  sys.blocks = std::move(blocks);
  return sys;
}

/// G_n = union of the H blocks selected by K_n (Lemma-style union subsystem).
/// K indexes positions in H_seq, 1-based.
inline std::vector<IndexSet> union_blocks(std::span<const IndexSet> h_seq,
                                          std::span<const IndexSet> k_seq) {
  if (!strictly_ordered(h_seq)) {
    throw std::invalid_argument("union_blocks: H sequence violates ordering");
  }
  if (!strictly_ordered(k_seq)) {
    throw std::invalid_argument("union_blocks: K sequence violates ordering");
  }
  std::vector<IndexSet> out;
  out.reserve(k_seq.size());
  for (const IndexSet& k : k_seq) {
    if (k.max() > static_cast<Index>(h_seq.size())) {
      throw std::out_of_range("union_blocks: K selects a block beyond H sequence");
    }
    std::vector<Index> merged;
    for (Index t : k) {
      const auto& h = h_seq[static_cast<std::size_t>(t - 1)];
      merged.insert(merged.end(), h.begin(), h.end());
    }
    out.emplace_back(std::move(merged));
  }
  return out;
}

}  // namespace ramsey
