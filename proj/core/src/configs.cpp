#include "ramsey/configs.hpp"

namespace ramsey {

std::uint64_t ap_expression_count(std::size_t k) {
  std::uint64_t total = 0;
  for (std::size_t j = 1; j <= k; ++j) {
    std::uint64_t falling = 1;  // k!/(k-j)! = k*(k-1)*...*(k-j+1)
    for (std::size_t i = 0; i < j; ++i) falling *= static_cast<std::uint64_t>(k - i);
    total += falling;
  }
  return total;
}

SequenceSource<GaussianInt> interleave_gaussian(const SequenceSource<Int>& x) {
  return SequenceSource<GaussianInt>(
      [x](Index m) -> GaussianInt {
        if (m % 2 == 1) return GaussianInt{x.at((m + 1) / 2), 0};
        return GaussianInt{0, x.at(m / 2)};
      },
      2 * x.bound(), "interleave(" + x.name() + ")");
}

SequenceSource<LipschitzQuat> interleave_quaternion(const SequenceSource<Int>& x) {
  return SequenceSource<LipschitzQuat>(
      [x](Index n) -> LipschitzQuat {
        switch (n % 4) {
          case 1: return LipschitzQuat{x.at(n / 4 + 1), 0, 0, 0};
          case 2: return LipschitzQuat{0, x.at(n / 4 + 1), 0, 0};
          case 3: return LipschitzQuat{0, 0, x.at(n / 4 + 1), 0};
          default: return LipschitzQuat{0, 0, 0, x.at(n / 4)};
        }
      },
      4 * x.bound(), "interleave4(" + x.name() + ")");
}

}  // namespace ramsey
