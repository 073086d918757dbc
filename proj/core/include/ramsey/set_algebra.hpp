#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ramsey/gaussian.hpp"
#include "ramsey/quaternion.hpp"
#include "ramsey/sequences.hpp"

namespace ramsey {

/// A symbolic, decidable description of a candidate large set: residue
/// classes and ideals closed under boolean operations, translation,
/// dilation and multiplicative preimages. Membership is evaluated by
/// structural recursion; nothing here certifies largeness.
template <class T>
class SetDescription {
 public:
  /// z*R (Gaussian) or the two-sided ideal zL for rational-integer z.
  static SetDescription ideal(T z) {
    check_ideal_modulus(z);
    return make(Kind::kIdeal, std::move(z));
  }
  /// r + z*R, or the left coset r + L*a of a quaternion modulus.
  static SetDescription residue(T modulus, T representative) {
    if (modulus.is_zero()) throw std::invalid_argument("set description: zero modulus");
    return make(Kind::kResidue, std::move(modulus), std::move(representative));
  }

  SetDescription union_with(SetDescription other) const {
    return make(Kind::kUnion, {}, {}, root_, other.root_);
  }
  SetDescription intersect(SetDescription other) const {
    return make(Kind::kIntersect, {}, {}, root_, other.root_);
  }
  SetDescription complement() const { return make(Kind::kComplement, {}, {}, root_); }

  bool contains(const T& s) const { return eval(*root_, s); }

  std::string to_text() const { return print(*root_); }

  template <class U>
  friend SetDescription<U> translate(const SetDescription<U>&, U);
  template <class U>
  friend SetDescription<U> dilate(const SetDescription<U>&, U);
  template <class U>
  friend SetDescription<U> left_preimage(const SetDescription<U>&, U);
  template <class U>
  friend SetDescription<U> right_preimage(const SetDescription<U>&, U);

 private:
  enum class Kind {
    kIdeal,       // elem1 = modulus
    kResidue,     // elem1 = modulus, elem2 = representative
    kUnion,
    kIntersect,
    kComplement,
    kTranslate,   // elem1 = s; member(y) = member(child, s + y)
    kDilate,      // elem1 = z; member(y) = z | y and member(child, y / z)
    kLeftPre,     // elem1 = a; member(y) = member(child, a * y)
    kRightPre,    // elem1 = b; member(y) = member(child, y * b)
  };

  struct Node {
    Kind kind;
    T elem1{};
    T elem2{};
    std::shared_ptr<const Node> a;
    std::shared_ptr<const Node> b;
  };

  explicit SetDescription(std::shared_ptr<const Node> root) : root_(std::move(root)) {}

  static SetDescription make(Kind kind, T e1 = {}, T e2 = {},
                             std::shared_ptr<const Node> a = nullptr,
                             std::shared_ptr<const Node> b = nullptr) {
    return SetDescription(std::make_shared<const Node>(
        Node{kind, std::move(e1), std::move(e2), std::move(a), std::move(b)}));
  }

  static bool eval(const Node& n, const T& s) {
    switch (n.kind) {
      case Kind::kIdeal: return ideal_member(n.elem1, s);
      case Kind::kResidue: return ideal_member(n.elem1, s - n.elem2);
      case Kind::kUnion: return eval(*n.a, s) || eval(*n.b, s);
      case Kind::kIntersect: return eval(*n.a, s) && eval(*n.b, s);
      case Kind::kComplement: return !eval(*n.a, s);
      case Kind::kTranslate: return eval(*n.a, n.elem1 + s);
      case Kind::kDilate: {
        auto q = try_exact_div(s, n.elem1);
        return q.has_value() && eval(*n.a, *q);
      }
      case Kind::kLeftPre: return eval(*n.a, n.elem1 * s);
      case Kind::kRightPre: return eval(*n.a, s * n.elem1);
    }
    return false;
  }

  static std::string print(const Node& n) {
    switch (n.kind) {
      case Kind::kIdeal: return "ideal(" + RingIO<T>::print(n.elem1) + ")";
      case Kind::kResidue:
        return "residue(" + RingIO<T>::print(n.elem1) + "; " + RingIO<T>::print(n.elem2) + ")";
      case Kind::kUnion: return "(" + print(*n.a) + " | " + print(*n.b) + ")";
      case Kind::kIntersect: return "(" + print(*n.a) + " & " + print(*n.b) + ")";
      case Kind::kComplement: return "!" + print(*n.a);
      case Kind::kTranslate: return "shift(" + RingIO<T>::print(n.elem1) + ")" + print(*n.a);
      case Kind::kDilate: return "dilate(" + RingIO<T>::print(n.elem1) + ")" + print(*n.a);
      case Kind::kLeftPre: return "lpre(" + RingIO<T>::print(n.elem1) + ")" + print(*n.a);
      case Kind::kRightPre: return "rpre(" + RingIO<T>::print(n.elem1) + ")" + print(*n.a);
    }
    return {};
  }

  std::shared_ptr<const Node> root_;
};

template <class T>
bool member(const SetDescription<T>& set, const T& s) {
  return set.contains(s);
}

/// -s + A: membership of y means s + y lies in A.
template <class T>
SetDescription<T> translate(const SetDescription<T>& a, T s) {
  return SetDescription<T>::make(SetDescription<T>::Kind::kTranslate, std::move(s), {}, a.root_);
}

/// zA: y is a multiple of z whose exact quotient lies in A.
template <class T>
SetDescription<T> dilate(const SetDescription<T>& a, T z) {
  check_ideal_modulus(z);
  return SetDescription<T>::make(SetDescription<T>::Kind::kDilate, std::move(z), {}, a.root_);
}

/// a^-1 A: membership of y means a*y lies in A.
template <class T>
SetDescription<T> left_preimage(const SetDescription<T>& set, T a) {
  if (a.is_zero()) throw std::invalid_argument("left_preimage: zero multiplier");
  return SetDescription<T>::make(SetDescription<T>::Kind::kLeftPre, std::move(a), {}, set.root_);
}

/// A b^-1: membership of y means y*b lies in A.
template <class T>
SetDescription<T> right_preimage(const SetDescription<T>& set, T b) {
  if (b.is_zero()) throw std::invalid_argument("right_preimage: zero multiplier");
  return SetDescription<T>::make(SetDescription<T>::Kind::kRightPre, std::move(b), {}, set.root_);
}

/// Parses the description grammar:
///   expr   := inter ('|' inter)*
///   inter  := unary ('&' unary)*
///   unary  := '!' unary | transform '(' elem ')' unary | atom | '(' expr ')'
///   atom   := 'ideal' '(' elem ')' | 'residue' '(' elem ';' elem ')'
/// with transforms shift, dilate, lpre, rpre. Elements use the ring's text
/// encoding.
SetDescription<GaussianInt> parse_gaussian_set(std::string_view text);
SetDescription<LipschitzQuat> parse_quaternion_set(std::string_view text);

struct JWitnessBounds {
  long box_radius = 2;  // candidate a ranges over the coordinate box
  Index h_max = 6;      // H ranges over nonempty subsets of {1..h_max}
};

template <class T>
struct JWitness {
  T a;
  IndexSet h;
};

/// Searches for a and H with a + sum_{t in H} f(t) in A for every f in the
/// family. Exhausting the bounds proves nothing about A; it only reports
/// that this finite window holds no witness.
template <class T>
std::optional<JWitness<T>> find_j_witness(std::span<const SequenceSource<T>> family,
                                          const SetDescription<T>& set,
                                          const JWitnessBounds& bounds) {
  if (family.empty()) throw std::invalid_argument("find_j_witness: empty family");
  if (bounds.h_max < 1) throw std::invalid_argument("find_j_witness: h_max must be >= 1");
  for (const auto& f : family) {
    if (bounds.h_max > f.bound()) {
      throw std::out_of_range("find_j_witness: h_max exceeds bound of source '" + f.name() +
                              "'");
    }
  }

  // All nonempty H subsets of {1..h_max} by (size, lex), with per-f sums.
  std::vector<IndexSet> subsets;
  std::vector<std::vector<T>> sums;  // sums[s][fi]
  std::vector<Index> pick;
  auto gen = [&](auto&& self, Index next, std::size_t want) -> void {
    if (pick.size() == want) {
      subsets.emplace_back(pick);
      auto& row = sums.emplace_back();
      row.reserve(family.size());
      for (const auto& f : family) row.push_back(f.sum_over(subsets.back()));
      return;
    }
    for (Index t = next; t <= bounds.h_max; ++t) {
      pick.push_back(t);
      self(self, t + 1, want);
      pick.pop_back();
    }
  };
  for (std::size_t size = 1; size <= static_cast<std::size_t>(bounds.h_max); ++size) {
    gen(gen, 1, size);
  }

  for (const T& a : RingIO<T>::box(bounds.box_radius)) {
    for (std::size_t s = 0; s < subsets.size(); ++s) {
      bool ok = true;
      for (const T& sum : sums[s]) {
        if (!set.contains(a + sum)) {
          ok = false;
          break;
        }
      }
      if (ok) return JWitness<T>{a, subsets[s]};
    }
  }
  return std::nullopt;
}

}  // namespace ramsey
