#include "ramsey/quaternion.hpp"

#include <cctype>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ramsey {

namespace {

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

Int round_nearest(const Int& n, const Int& d) { return floor_div(2 * n + d, 2 * d); }

}  // namespace

Int q_norm(const LipschitzQuat& x) { return x.norm(); }

QuatDivRem q_right_divrem(const LipschitzQuat& x, const LipschitzQuat& a) {
  if (a.is_zero()) throw std::invalid_argument("q_right_divrem: division by zero");
  const Int n = a.norm();
  // x = q*a + r  =>  x*conj(a) = q*n + r*conj(a); round the rational q.
  const LipschitzQuat w = x * a.conj();
  const LipschitzQuat q{round_nearest(w.a(), n), round_nearest(w.b(), n),
                        round_nearest(w.c(), n), round_nearest(w.d(), n)};
  return {q, x - q * a};
}

std::vector<LipschitzQuat> q_left_coset_reps(const LipschitzQuat& a) {
  if (a.is_zero()) throw std::invalid_argument("q_left_coset_reps: division by zero");
  const Int n = a.norm();
  if (n > 100) {
    throw std::length_error("q_left_coset_reps: norm too large to enumerate");
  }
  // conj(a)*a = n gives n*L <= L*a, so every class meets [0, n)^4.
  const long side = n.convert_to<long>();
  std::set<LipschitzQuat> reps;
  for (long pa = 0; pa < side; ++pa)
    for (long pb = 0; pb < side; ++pb)
      for (long pc = 0; pc < side; ++pc)
        for (long pd = 0; pd < side; ++pd)
          reps.insert(q_right_divrem(LipschitzQuat{pa, pb, pc, pd}, a).r);
  if (Int(reps.size()) != n * n) {
    throw std::logic_error("q_left_coset_reps: class count does not match norm^2");
  }
  return {reps.begin(), reps.end()};
}

std::vector<LipschitzQuat> q_right_coset_reps(const LipschitzQuat& a) {
  auto left = q_left_coset_reps(a.conj());
  std::set<LipschitzQuat> reps;
  for (const auto& r : left) reps.insert(r.conj());
  return {reps.begin(), reps.end()};
}

bool q_right_divides(const LipschitzQuat& b, const LipschitzQuat& x) {
  return q_right_divrem(x, b).r.is_zero();
}

bool q_left_divides(const LipschitzQuat& a, const LipschitzQuat& x) {
  // x = a*q  iff  conj(x) = conj(q)*conj(a).
  return q_right_divides(a.conj(), x.conj());
}

bool ideal_member(const LipschitzQuat& z, const LipschitzQuat& x) {
  if (z.is_zero()) throw std::invalid_argument("ideal_member: zero modulus");
  if (z.is_central()) {
    const Int& t = z.a();
    return x.a() % t == 0 && x.b() % t == 0 && x.c() % t == 0 && x.d() % t == 0;
  }
  return q_right_divides(z, x);
}

std::optional<LipschitzQuat> try_exact_div(const LipschitzQuat& x, const LipschitzQuat& z) {
  if (!z.is_central() || z.is_zero()) {
    throw std::invalid_argument("try_exact_div: rational-integer divisor required");
  }
  const Int& t = z.a();
  if (x.a() % t != 0 || x.b() % t != 0 || x.c() % t != 0 || x.d() % t != 0) {
    return std::nullopt;
  }
  return LipschitzQuat{x.a() / t, x.b() / t, x.c() / t, x.d() / t};
}

void check_ideal_modulus(const LipschitzQuat& z) {
  if (z.is_zero()) throw std::invalid_argument("set description: zero modulus");
  if (!z.is_central()) {
    throw std::invalid_argument(
        "set description: quaternion ideal/dilation modulus must be a rational integer");
  }
}

namespace {

Int parse_int(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty integer");
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) throw std::invalid_argument("sign without digits");
  for (std::size_t k = i; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) {
      throw std::invalid_argument("bad integer literal: " + std::string(s));
    }
  }
  if (s[0] == '+') s.remove_prefix(1);
  return Int(std::string(s));
}

Int parse_coeff(std::string_view s) {
  if (s.empty() || s == "+") return 1;
  if (s == "-") return -1;
  return parse_int(s);
}

}  // namespace

LipschitzQuat parse_quaternion(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty quaternion literal");
  Int coord[4] = {0, 0, 0, 0};
  std::size_t start = 0;
  for (std::size_t k = 0; k <= text.size(); ++k) {
    const bool split = k == text.size() || (k > start && (text[k] == '+' || text[k] == '-'));
    if (!split) continue;
    std::string_view term = text.substr(start, k - start);
    if (term.empty() || term == "+" || term == "-") {
      throw std::invalid_argument("bad quaternion literal: " + std::string(text));
    }
    switch (term.back()) {
      case 'i': coord[1] += parse_coeff(term.substr(0, term.size() - 1)); break;
      case 'j': coord[2] += parse_coeff(term.substr(0, term.size() - 1)); break;
      case 'k': coord[3] += parse_coeff(term.substr(0, term.size() - 1)); break;
      default: coord[0] += parse_int(term); break;
    }
    start = k;
  }
  return {coord[0], coord[1], coord[2], coord[3]};
}

std::string to_string(const LipschitzQuat& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const Int& v, const char* unit) {
    if (v == 0) return;
    if (v > 0 && !first) os << '+';
    if (*unit == '\0') {
      os << v;
    } else if (v == -1) {
      os << '-' << unit;
    } else if (v == 1) {
      os << unit;
    } else {
      os << v << unit;
    }
    first = false;
  };
  emit(x.a(), "");
  emit(x.b(), "i");
  emit(x.c(), "j");
  emit(x.d(), "k");
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LipschitzQuat& x) {
  return os << to_string(x);
}

std::vector<LipschitzQuat> quaternion_box(long radius) {
  std::vector<LipschitzQuat> out;
  for (long a = -radius; a <= radius; ++a)
    for (long b = -radius; b <= radius; ++b)
      for (long c = -radius; c <= radius; ++c)
        for (long d = -radius; d <= radius; ++d) out.push_back(LipschitzQuat{a, b, c, d});
  return out;
}

}  // namespace ramsey
