#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace e2q {

// GMP rationals are kept canonical by every arithmetic operator of mpq_class;
// values built from strings are canonicalized explicitly in parse_rational.
using Rational = mpq_class;
using Integer = mpz_class;
using Vector = std::vector<Rational>;

/// Canonical text form: "3", "-1/2". Never "6/4", never "+3".
inline std::string to_string(const Rational& q) { return q.get_str(10); }

inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rational q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("malformed rational literal: '" + s + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

inline bool is_canonical(const Rational& q) {
  if (sgn(q.get_den()) <= 0) return false;
  Integer g;
  mpz_gcd(g.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return g == 1 || (q.get_num() == 0 && q.get_den() == 1);
}

inline bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

inline Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n, Rational(0));
  v.at(i) = 1;
  return v;
}

}  // namespace e2q
