#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ramsey {

using Int = boost::multiprecision::cpp_int;

/// An element of Z[i] with exact integer coordinates.
class GaussianInt {
 public:
  GaussianInt() = default;
  GaussianInt(Int re, Int im) : re_(std::move(re)), im_(std::move(im)) {}
  GaussianInt(Int re) : re_(std::move(re)) {}  // embeds Z
  GaussianInt(int re) : re_(re) {}

  const Int& re() const { return re_; }
  const Int& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }

  GaussianInt conj() const { return {re_, -im_}; }
  Int norm() const { return re_ * re_ + im_ * im_; }

  friend GaussianInt operator+(const GaussianInt& x, const GaussianInt& y) {
    return {x.re_ + y.re_, x.im_ + y.im_};
  }
  friend GaussianInt operator-(const GaussianInt& x, const GaussianInt& y) {
    return {x.re_ - y.re_, x.im_ - y.im_};
  }
  friend GaussianInt operator-(const GaussianInt& x) { return {-x.re_, -x.im_}; }
  friend GaussianInt operator*(const GaussianInt& x, const GaussianInt& y) {
    return {x.re_ * y.re_ - x.im_ * y.im_, x.re_ * y.im_ + x.im_ * y.re_};
  }
  GaussianInt& operator+=(const GaussianInt& y) { return *this = *this + y; }

  friend bool operator==(const GaussianInt&, const GaussianInt&) = default;
  // Lexicographic (re, im); used for canonical sorted value sets.
  friend bool operator<(const GaussianInt& x, const GaussianInt& y) {
    if (x.re_ != y.re_) return x.re_ < y.re_;
    return x.im_ < y.im_;
  }

 private:
  Int re_ = 0;
  Int im_ = 0;
};

Int gi_norm(const GaussianInt& x);

struct GaussianDivRem {
  GaussianInt q;
  GaussianInt r;
};

/// Euclidean division: x = q*z + r with norm(r) < norm(z), z != 0.
/// Deterministic: each coordinate of the exact quotient x*conj(z)/norm(z)
/// is rounded to the nearest integer, with the half-remainder landing on
/// the negative side (quotient ties go up).
GaussianDivRem gi_divrem(const GaussianInt& x, const GaussianInt& z);

/// True iff x is a multiple of z (z != 0).
bool gi_divides(const GaussianInt& z, const GaussianInt& x);

/// The canonical transversal of Z[i]/(z): exactly norm(z) elements, each the
/// remainder gi_divrem produces for its class, in lexicographic (re, im) order.
std::vector<GaussianInt> gi_coset_reps(const GaussianInt& z);

/// Parses "a+bi" / "a-bi" / "a" / "bi" with optional sign, no whitespace.
GaussianInt parse_gaussian(std::string_view text);
std::string to_string(const GaussianInt& x);
std::ostream& operator<<(std::ostream& os, const GaussianInt& x);

/// All elements with |re|, |im| <= radius, in lexicographic order.
std::vector<GaussianInt> gaussian_box(long radius);

// --- hooks shared by the ring-generic algorithms ---

inline Int ring_norm(const GaussianInt& z) { return gi_norm(z); }
/// Number of congruence classes modulo z.
inline Int coset_count(const GaussianInt& z) { return gi_norm(z); }
inline GaussianInt canonical_remainder(const GaussianInt& x, const GaussianInt& z) {
  return gi_divrem(x, z).r;
}
inline bool ideal_member(const GaussianInt& z, const GaussianInt& x) {
  return gi_divides(z, x);
}
/// Exact quotient x/z when z | x.
std::optional<GaussianInt> try_exact_div(const GaussianInt& x, const GaussianInt& z);
/// Moduli of ideal/dilation nodes need only be nonzero in Z[i].
void check_ideal_modulus(const GaussianInt& z);

template <class T>
struct RingIO;

template <>
struct RingIO<Int> {
  static constexpr const char* name = "int";
  static Int parse(std::string_view s);
  static std::string print(const Int& x) { return x.str(); }
  static std::vector<Int> box(long radius) {
    std::vector<Int> out;
    for (long v = -radius; v <= radius; ++v) out.push_back(Int(v));
    return out;
  }
};

template <>
struct RingIO<GaussianInt> {
  static constexpr const char* name = "gauss";
  static GaussianInt parse(std::string_view s) { return parse_gaussian(s); }
  static std::string print(const GaussianInt& x) { return to_string(x); }
  static std::vector<GaussianInt> box(long radius) { return gaussian_box(radius); }
};

}  // namespace ramsey
