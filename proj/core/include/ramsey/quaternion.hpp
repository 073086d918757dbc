#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ramsey/gaussian.hpp"

namespace ramsey {

/// An integer quaternion a + bi + cj + dk with the Hamilton product
/// (i^2 = j^2 = k^2 = ijk = -1). Multiplication is not commutative.
class LipschitzQuat {
 public:
  LipschitzQuat() = default;
  LipschitzQuat(Int a, Int b, Int c, Int d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}
  LipschitzQuat(Int a) : a_(std::move(a)) {}  // embeds Z
  LipschitzQuat(int a) : a_(a) {}

  const Int& a() const { return a_; }
  const Int& b() const { return b_; }
  const Int& c() const { return c_; }
  const Int& d() const { return d_; }

  bool is_zero() const { return a_ == 0 && b_ == 0 && c_ == 0 && d_ == 0; }
  /// True for elements of the center Z, i.e. b = c = d = 0.
  bool is_central() const { return b_ == 0 && c_ == 0 && d_ == 0; }

  LipschitzQuat conj() const { return {a_, -b_, -c_, -d_}; }
  Int norm() const { return a_ * a_ + b_ * b_ + c_ * c_ + d_ * d_; }

  friend LipschitzQuat operator+(const LipschitzQuat& x, const LipschitzQuat& y) {
    return {x.a_ + y.a_, x.b_ + y.b_, x.c_ + y.c_, x.d_ + y.d_};
  }
  friend LipschitzQuat operator-(const LipschitzQuat& x, const LipschitzQuat& y) {
    return {x.a_ - y.a_, x.b_ - y.b_, x.c_ - y.c_, x.d_ - y.d_};
  }
  friend LipschitzQuat operator-(const LipschitzQuat& x) {
    return {-x.a_, -x.b_, -x.c_, -x.d_};
  }
  friend LipschitzQuat operator*(const LipschitzQuat& x, const LipschitzQuat& y) {
    return {x.a_ * y.a_ - x.b_ * y.b_ - x.c_ * y.c_ - x.d_ * y.d_,
            x.a_ * y.b_ + x.b_ * y.a_ + x.c_ * y.d_ - x.d_ * y.c_,
            x.a_ * y.c_ - x.b_ * y.d_ + x.c_ * y.a_ + x.d_ * y.b_,
            x.a_ * y.d_ + x.b_ * y.c_ - x.c_ * y.b_ + x.d_ * y.a_};
  }
  LipschitzQuat& operator+=(const LipschitzQuat& y) { return *this = *this + y; }

  friend bool operator==(const LipschitzQuat&, const LipschitzQuat&) = default;
  // Lexicographic (a, b, c, d); canonical value-set order.
  friend bool operator<(const LipschitzQuat& x, const LipschitzQuat& y) {
    if (x.a_ != y.a_) return x.a_ < y.a_;
    if (x.b_ != y.b_) return x.b_ < y.b_;
    if (x.c_ != y.c_) return x.c_ < y.c_;
    return x.d_ < y.d_;
  }

 private:
  Int a_ = 0, b_ = 0, c_ = 0, d_ = 0;
};

inline LipschitzQuat q_mul(const LipschitzQuat& x, const LipschitzQuat& y) { return x * y; }
Int q_norm(const LipschitzQuat& x);

struct QuatDivRem {
  LipschitzQuat q;
  LipschitzQuat r;
};

/// Near-division on the right: x = q*a + r with norm(r) <= norm(a), a != 0.
/// L is not Euclidean, so the bound is not strict; the same coordinate
/// rounding rule as gi_divrem keeps the result deterministic.
QuatDivRem q_right_divrem(const LipschitzQuat& x, const LipschitzQuat& a);

/// A complete duplicate-free transversal of the left ideal L*a
/// (x ~ y iff x - y is in L*a); exactly norm(a)^2 elements, lex order.
std::vector<LipschitzQuat> q_left_coset_reps(const LipschitzQuat& a);
/// Transversal of a*L, obtained by conjugating the left construction.
std::vector<LipschitzQuat> q_right_coset_reps(const LipschitzQuat& a);

/// x in a*L, i.e. a is a left divisor of x.
bool q_left_divides(const LipschitzQuat& a, const LipschitzQuat& x);
/// x in L*b, i.e. b is a right divisor of x.
bool q_right_divides(const LipschitzQuat& b, const LipschitzQuat& x);

/// Parses "a+bi+cj+dk" with omissible zero terms, e.g. "1+i+j+k", "2k", "-3+2j".
LipschitzQuat parse_quaternion(std::string_view text);
std::string to_string(const LipschitzQuat& x);
std::ostream& operator<<(std::ostream& os, const LipschitzQuat& x);

/// All elements with every coordinate in [-radius, radius], lex order.
std::vector<LipschitzQuat> quaternion_box(long radius);

// --- hooks shared by the ring-generic algorithms ---

inline Int ring_norm(const LipschitzQuat& z) { return q_norm(z); }
/// Number of left cosets of L*z, i.e. norm(z)^2.
inline Int coset_count(const LipschitzQuat& z) {
  const Int n = q_norm(z);
  return n * n;
}
inline LipschitzQuat canonical_remainder(const LipschitzQuat& x, const LipschitzQuat& z) {
  return q_right_divrem(x, z).r;
}
/// Divisibility target: the two-sided ideal zL = Lz for central z, and the
/// left ideal L*z otherwise (coset classification divides on the right).
bool ideal_member(const LipschitzQuat& z, const LipschitzQuat& x);
/// Exact quotient x/z for central z when defined.
std::optional<LipschitzQuat> try_exact_div(const LipschitzQuat& x, const LipschitzQuat& z);
/// Ideal/dilation moduli must be nonzero rational integers so the two
/// one-sided ideals coincide.
void check_ideal_modulus(const LipschitzQuat& z);

template <>
struct RingIO<LipschitzQuat> {
  static constexpr const char* name = "quat";
  static LipschitzQuat parse(std::string_view s) { return parse_quaternion(s); }
  static std::string print(const LipschitzQuat& x) { return to_string(x); }
  static std::vector<LipschitzQuat> box(long radius) { return quaternion_box(radius); }
};

}  // namespace ramsey
