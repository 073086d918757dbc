#include "ramsey/builder.hpp"

namespace ramsey {

std::vector<IndexSet> candidate_blocks(Index start, Index limit, int cap) {
  std::vector<IndexSet> out;
  if (cap <= 0) return out;
  const Index lo = start + 1;
  for (Index maxi = lo; maxi <= limit; ++maxi) {
    const Index pool = maxi - lo;  // interior indices {lo .. maxi-1}
    for (Index card = 1; card <= pool + 1; ++card) {
      // blocks of this cardinality containing maxi, interior part in lex order
      const Index r = card - 1;
      std::vector<Index> combo(static_cast<std::size_t>(r));
      std::iota(combo.begin(), combo.end(), lo);
      for (;;) {
        std::vector<Index> block(combo);
        block.push_back(maxi);
        out.emplace_back(std::move(block));
        if (static_cast<int>(out.size()) >= cap) return out;
        // next lex combination of r elements from {lo .. maxi-1}
        Index i = r - 1;
        while (i >= 0 && combo[static_cast<std::size_t>(i)] == maxi - 1 - (r - 1 - i)) --i;
        if (i < 0) break;
        ++combo[static_cast<std::size_t>(i)];
        for (Index j = i + 1; j < r; ++j) {
          combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
        }
      }
    }
  }
  return out;
}

}  // namespace ramsey
