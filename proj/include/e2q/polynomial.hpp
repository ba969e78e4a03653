#pragma once

#include "e2q/matrix.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace e2q {

/// Univariate polynomial over Q, coefficients stored lowest degree first with
/// no trailing zeros. The zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial constant(const Rational& a) { return Polynomial({a}); }
  static Polynomial monomial(std::size_t degree, const Rational& a = 1) {
    std::vector<Rational> c(degree + 1);
    c[degree] = a;
    return Polynomial(std::move(c));
  }
  /// t - r
  static Polynomial linear_root(const Rational& r) { return Polynomial({-r, Rational(1)}); }

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const Rational& leading() const { return c_.back(); }
  const std::vector<Rational>& coefficients() const { return c_; }
  Rational coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

  Polynomial monic() const {
    if (is_zero()) return *this;
    Polynomial p = *this;
    const Rational inv = 1 / leading();
    for (auto& x : p.c_) x *= inv;
    return p;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
    return Polynomial(std::move(d));
  }

  Rational operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// Horner evaluation at a square matrix.
  Matrix operator()(const Matrix& m) const {
    if (!m.square()) throw std::invalid_argument("polynomial evaluated at non-square matrix");
    Matrix acc(m.rows(), m.cols());
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc = acc * m;
      for (std::size_t i = 0; i < m.rows(); ++i) acc(i, i) += *it;
    }
    return acc;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) + b.coefficient(i);
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) - b.coefficient(i);
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
  }

  /// Quotient and remainder of Euclidean division.
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {Polynomial{}, a};
    std::vector<Rational> rem = a.c_;
    std::vector<Rational> quo(a.c_.size() - b.c_.size() + 1);
    const Rational inv = 1 / b.leading();
    for (std::size_t k = quo.size(); k-- > 0;) {
      const Rational f = rem[k + b.c_.size() - 1] * inv;
      quo[k] = f;
      if (sgn(f) == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) rem[k + j] -= f * b.c_[j];
    }
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
  }
  friend Polynomial operator/(const Polynomial& a, const Polynomial& b) { return divmod(a, b).first; }
  friend Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }

 private:
  void trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

/// Monic greatest common divisor (zero if both inputs are zero).
inline Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

inline Polynomial lcm(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return (a * b / gcd(a, b)).monic();
}

struct Bezout {
  Polynomial g;  // monic gcd
  Polynomial u;
  Polynomial v;  // u*a + v*b == g
};

inline Bezout extended_gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial r0 = a, r1 = b;
  Polynomial s0 = Polynomial::constant(1), s1;
  Polynomial t0, t1 = Polynomial::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Rational inv = 1 / r0.leading();
  const auto scale = Polynomial::constant(inv);
  return {r0 * scale, s0 * scale, t0 * scale};
}

/// Yun's square-free decomposition of a monic polynomial of positive degree:
/// returns P_1, P_2, ... with f = prod P_i^i, the P_i square-free and pairwise
/// coprime (some may be 1).
inline std::vector<Polynomial> square_free_decomposition(const Polynomial& f) {
  if (f.degree() < 1) return {};
  const Polynomial one = Polynomial::constant(1);
  const Polynomial fm = f.monic();
  const Polynomial d0 = fm.derivative();
  const Polynomial a0 = gcd(fm, d0);
  Polynomial b = fm / a0;
  Polynomial c = d0 / a0;
  Polynomial d = c - b.derivative();
  std::vector<Polynomial> factors;
  while (b.degree() > 0) {
    Polynomial a = gcd(b, d);
    b = b / a;
    c = d / a;
    d = c - b.derivative();
    factors.push_back(a.monic());
  }
  return factors;
}

namespace detail {

// Positive divisors of |n|; nullopt when |n| is too large to factor by trial division.
inline std::optional<std::vector<Integer>> small_divisors(const Integer& n) {
  Integer m = abs(n);
  if (m == 0 || m > Integer("1000000000000")) return std::nullopt;
  std::vector<Integer> lows, highs;
  for (Integer d = 1; d * d <= m; ++d) {
    if (m % d != 0) continue;
    lows.push_back(d);
    if (d * d != m) highs.push_back(m / d);
  }
  lows.insert(lows.end(), highs.rbegin(), highs.rend());
  return lows;
}

}  // namespace detail

/// Distinct rational roots, found by the rational root test on the integer
/// multiple of `p`. Gives up (returns what it has) on coefficients too large to
/// factor by trial division.
inline std::vector<Rational> rational_roots(const Polynomial& p) {
  std::vector<Rational> roots;
  if (p.degree() < 1) return roots;
  Integer den_lcm = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> ic;
  for (const auto& c : p.coefficients()) ic.push_back(Integer(Rational(c * den_lcm)));
  std::size_t low = 0;
  while (ic[low] == 0) ++low;
  if (low > 0) roots.push_back(0);
  if (low + 1 == ic.size()) return roots;
  const auto ps = detail::small_divisors(ic[low]);
  const auto qs = detail::small_divisors(ic.back());
  if (!ps || !qs) return roots;
  std::vector<Rational> candidates;
  for (const auto& num : *ps)
    for (const auto& den : *qs)
      for (int sign : {1, -1}) {
        Rational r(num * sign, den);
        r.canonicalize();
        if (sgn(p(r)) == 0 && std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

/// Minimal polynomial of a square matrix: the first linear dependency among
/// I, M, M^2, ... (monic).
inline Polynomial minimal_polynomial(const Matrix& m) {
  if (!m.square()) throw std::invalid_argument("minimal polynomial of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Polynomial::constant(1);
  std::vector<Vector> powers{Matrix::identity(n).data()};
  Matrix current = Matrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    current = current * m;
    const Matrix basis = Matrix::from_columns(n * n, powers);
    if (auto c = solve(basis, current.data())) {
      std::vector<Rational> coeffs(k + 1);
      for (std::size_t j = 0; j < k; ++j) coeffs[j] = -(*c)[j];
      coeffs[k] = 1;
      return Polynomial(std::move(coeffs));
    }
    powers.push_back(current.data());
  }
  throw std::logic_error("minimal polynomial degree exceeded matrix size");
}

}  // namespace e2q
