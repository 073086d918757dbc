#pragma once

// Test-side mirror of the set-description algebra: random description
// generation, rendering to the text grammar, and a naive membership
// evaluator whose arithmetic decisions are independent of the library's
// division-with-rounding path.

#include <memory>
#include <random>
#include <string>

#include "oracles.hpp"
#include "ramsey/gaussian.hpp"
#include "ramsey/quaternion.hpp"

namespace naive {

using ramsey::GaussianInt;
using ramsey::Int;
using ramsey::LipschitzQuat;

template <class T>
struct Node {
  enum Kind { kIdeal, kResidue, kUnion, kInter, kCompl, kShift, kDilate, kLpre, kRpre } kind;
  T e1{};
  T e2{};
  std::shared_ptr<Node> a;
  std::shared_ptr<Node> b;
};

// z | x iff conj(z)*x has both coordinates divisible by norm(z); an
// algebraic route with no rounding anywhere.
inline bool ideal_naive(const GaussianInt& z, const GaussianInt& x) {
  const Int n = z.norm();
  const GaussianInt w = z.conj() * x;
  return w.re() % n == 0 && w.im() % n == 0;
}
inline bool ideal_naive(const LipschitzQuat& z, const LipschitzQuat& x) {
  if (z.is_central()) {
    const Int& t = z.a();
    return x.a() % t == 0 && x.b() % t == 0 && x.c() % t == 0 && x.d() % t == 0;
  }
  return oracles::q_in_left_ideal_naive(z, x);
}

inline bool exact_div_naive(const GaussianInt& z, const GaussianInt& s, GaussianInt& out) {
  const Int n = z.norm();
  const GaussianInt w = z.conj() * s;
  if (w.re() % n != 0 || w.im() % n != 0) return false;
  out = GaussianInt{w.re() / n, w.im() / n};
  return true;
}
inline bool exact_div_naive(const LipschitzQuat& z, const LipschitzQuat& s,
                            LipschitzQuat& out) {
  const Int& t = z.a();  // dilation moduli are rational integers
  if (s.a() % t != 0 || s.b() % t != 0 || s.c() % t != 0 || s.d() % t != 0) return false;
  out = LipschitzQuat{s.a() / t, s.b() / t, s.c() / t, s.d() / t};
  return true;
}

template <class T>
bool eval(const Node<T>& n, const T& s) {
  switch (n.kind) {
    case Node<T>::kIdeal: return ideal_naive(n.e1, s);
    case Node<T>::kResidue: return ideal_naive(n.e1, s - n.e2);
    case Node<T>::kUnion: return eval(*n.a, s) || eval(*n.b, s);
    case Node<T>::kInter: return eval(*n.a, s) && eval(*n.b, s);
    case Node<T>::kCompl: return !eval(*n.a, s);
    case Node<T>::kShift: return eval(*n.a, n.e1 + s);
    case Node<T>::kDilate: {
      T q{};
      return exact_div_naive(n.e1, s, q) && eval(*n.a, q);
    }
    case Node<T>::kLpre: return eval(*n.a, n.e1 * s);
    case Node<T>::kRpre: return eval(*n.a, s * n.e1);
  }
  return false;
}

template <class T>
std::string render(const Node<T>& n) {
  using IO = ramsey::RingIO<T>;
  switch (n.kind) {
    case Node<T>::kIdeal: return "ideal(" + IO::print(n.e1) + ")";
    case Node<T>::kResidue:
      return "residue(" + IO::print(n.e1) + "; " + IO::print(n.e2) + ")";
    case Node<T>::kUnion: return "(" + render(*n.a) + " | " + render(*n.b) + ")";
    case Node<T>::kInter: return "(" + render(*n.a) + " & " + render(*n.b) + ")";
    case Node<T>::kCompl: return "!" + render(*n.a);
    case Node<T>::kShift: return "shift(" + IO::print(n.e1) + ")" + render(*n.a);
    case Node<T>::kDilate: return "dilate(" + IO::print(n.e1) + ")" + render(*n.a);
    case Node<T>::kLpre: return "lpre(" + IO::print(n.e1) + ")" + render(*n.a);
    case Node<T>::kRpre: return "rpre(" + IO::print(n.e1) + ")" + render(*n.a);
  }
  return {};
}

inline GaussianInt random_nonzero_gauss(std::mt19937_64& rng, long radius) {
  std::uniform_int_distribution<long> d(-radius, radius);
  for (;;) {
    GaussianInt g{d(rng), d(rng)};
    if (!g.is_zero()) return g;
  }
}
inline LipschitzQuat random_nonzero_quat(std::mt19937_64& rng, long radius) {
  std::uniform_int_distribution<long> d(-radius, radius);
  for (;;) {
    LipschitzQuat q{d(rng), d(rng), d(rng), d(rng)};
    if (!q.is_zero()) return q;
  }
}

// Shapes shared by both rings; ring-specific element choices below.
template <class T, class ElemGen, class CentralGen>
std::shared_ptr<Node<T>> random_tree(std::mt19937_64& rng, int depth, ElemGen&& elem,
                                     CentralGen&& central) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 8);
  auto n = std::make_shared<Node<T>>();
  switch (pick(rng)) {
    case 0:
      n->kind = Node<T>::kIdeal;
      n->e1 = central(rng);
      break;
    case 1:
      n->kind = Node<T>::kResidue;
      n->e1 = elem(rng);
      n->e2 = elem(rng);
      break;
    case 2:
      n->kind = Node<T>::kUnion;
      n->a = random_tree<T>(rng, depth - 1, elem, central);
      n->b = random_tree<T>(rng, depth - 1, elem, central);
      break;
    case 3:
      n->kind = Node<T>::kInter;
      n->a = random_tree<T>(rng, depth - 1, elem, central);
      n->b = random_tree<T>(rng, depth - 1, elem, central);
      break;
    case 4:
      n->kind = Node<T>::kCompl;
      n->a = random_tree<T>(rng, depth - 1, elem, central);
      break;
    case 5:
      n->kind = Node<T>::kShift;
      n->e1 = elem(rng);
      n->a = random_tree<T>(rng, depth - 1, elem, central);
      break;
    case 6:
      n->kind = Node<T>::kDilate;
      n->e1 = central(rng);
      n->a = random_tree<T>(rng, depth - 1, elem, central);
      break;
    case 7:
      n->kind = Node<T>::kLpre;
      n->e1 = elem(rng);
      n->a = random_tree<T>(rng, depth - 1, elem, central);
      break;
    default:
      n->kind = Node<T>::kRpre;
      n->e1 = elem(rng);
      n->a = random_tree<T>(rng, depth - 1, elem, central);
      break;
  }
  return n;
}

inline std::shared_ptr<Node<GaussianInt>> random_gauss_tree(std::mt19937_64& rng, int depth) {
  auto elem = [](std::mt19937_64& r) { return random_nonzero_gauss(r, 3); };
  auto central = elem;  // any nonzero Gaussian modulus is allowed
  return random_tree<GaussianInt>(rng, depth, elem, central);
}

inline std::shared_ptr<Node<LipschitzQuat>> random_quat_tree(std::mt19937_64& rng, int depth) {
  auto elem = [](std::mt19937_64& r) { return random_nonzero_quat(r, 2); };
  auto central = [](std::mt19937_64& r) {
    std::uniform_int_distribution<long> d(2, 4);
    return LipschitzQuat{d(r), 0, 0, 0};
  };
  return random_tree<LipschitzQuat>(rng, depth, elem, central);
}

}  // namespace naive
