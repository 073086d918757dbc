#include "ramsey/gaussian.hpp"

#include <cctype>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ramsey {

namespace {

Int floor_div(const Int& a, const Int& b) {
  // b > 0; cpp_int division truncates toward zero.
  Int q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

// Nearest integer to n/d (d > 0); a coordinate exactly halfway rounds up,
// so the remainder coordinate lies in [-d/2, d/2).
Int round_nearest(const Int& n, const Int& d) { return floor_div(2 * n + d, 2 * d); }

Int isqrt_ceil(const Int& n) {
  Int s = boost::multiprecision::sqrt(n);
  if (s * s < n) ++s;
  return s;
}

}  // namespace

Int gi_norm(const GaussianInt& x) { return x.norm(); }

GaussianDivRem gi_divrem(const GaussianInt& x, const GaussianInt& z) {
  if (z.is_zero()) throw std::invalid_argument("gi_divrem: division by zero");
  const Int n = z.norm();
  const GaussianInt w = x * z.conj();
  const GaussianInt q{round_nearest(w.re(), n), round_nearest(w.im(), n)};
  return {q, x - q * z};
}

bool gi_divides(const GaussianInt& z, const GaussianInt& x) {
  return gi_divrem(x, z).r.is_zero();
}

std::vector<GaussianInt> gi_coset_reps(const GaussianInt& z) {
  if (z.is_zero()) throw std::invalid_argument("gi_coset_reps: division by zero");
  const Int n = z.norm();
  // Every canonical remainder r has norm(r) <= n/2, so its coordinates fit
  // inside |c| <= ceil(sqrt(n)); reducing that box therefore hits every class.
  const long side = isqrt_ceil(n).convert_to<long>();
  std::set<GaussianInt> reps;
  for (long re = -side; re <= side; ++re) {
    for (long im = -side; im <= side; ++im) {
      reps.insert(gi_divrem(GaussianInt{re, im}, z).r);
    }
  }
  if (Int(reps.size()) != n) {
    throw std::logic_error("gi_coset_reps: class count does not match norm");
  }
  return {reps.begin(), reps.end()};
}

std::optional<GaussianInt> try_exact_div(const GaussianInt& x, const GaussianInt& z) {
  auto [q, r] = gi_divrem(x, z);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

void check_ideal_modulus(const GaussianInt& z) {
  if (z.is_zero()) throw std::invalid_argument("set description: zero modulus");
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

// Coefficient of an imaginary term, where "" / "+" / "-" mean +-1.
Int parse_coeff(std::string_view s) {
  if (s.empty() || s == "+") return 1;
  if (s == "-") return -1;
  return parse_int(s);
}

}  // namespace

Int RingIO<Int>::parse(std::string_view s) { return parse_int(s); }

GaussianInt parse_gaussian(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty gaussian literal");
  if (text.back() != 'i') return {parse_int(text), 0};
  std::string_view body = text.substr(0, text.size() - 1);
  // Split at the last interior +/- that starts the imaginary term.
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      return {parse_int(body.substr(0, k)), parse_coeff(body.substr(k))};
    }
  }
  return {0, parse_coeff(body)};
}

std::string to_string(const GaussianInt& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  if (x.re() != 0) os << x.re();
  if (x.im() != 0) {
    if (x.im() > 0 && x.re() != 0) os << '+';
    if (x.im() == -1) {
      os << '-';
    } else if (x.im() != 1) {
      os << x.im();
    }
    os << 'i';
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const GaussianInt& x) {
  return os << to_string(x);
}

std::vector<GaussianInt> gaussian_box(long radius) {
  std::vector<GaussianInt> out;
  out.reserve(static_cast<std::size_t>(2 * radius + 1) * (2 * radius + 1));
  for (long re = -radius; re <= radius; ++re) {
    for (long im = -radius; im <= radius; ++im) out.push_back(GaussianInt{re, im});
  }
  return out;
}

}  // namespace ramsey
