#include "test_support.hpp"

#include <gtest/gtest.h>

namespace e2q {
namespace {

Polynomial poly(std::initializer_list<int> c) {
  std::vector<Rational> v;
  for (int x : c) v.emplace_back(x);
  return Polynomial(v);
}

TEST(Polynomial, DivisionAndGcd) {
  const Polynomial a = poly({-1, 0, 1});  // t^2 - 1
  const Polynomial b = poly({1, 1});      // t + 1
  const auto [q, r] = divmod(a, b);
  EXPECT_EQ(q, poly({-1, 1}));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(gcd(a, poly({1, 2, 1})), b);
  EXPECT_EQ(lcm(poly({-1, 1}), poly({1, 1})), a);
}

TEST(Polynomial, BezoutIdentity) {
  const Polynomial f = poly({0, 0, 1}), g = poly({-1, 1});  // t^2 and t - 1
  const Bezout b = extended_gcd(f, g);
  EXPECT_EQ(b.g, Polynomial::constant(1));
  EXPECT_EQ(b.u * f + b.v * g, Polynomial::constant(1));
}

TEST(Polynomial, SquareFreeDecomposition) {
  // (t-1) (t+2)^2 t^3
  const Polynomial f = poly({-1, 1}) * poly({2, 1}) * poly({2, 1}) * Polynomial::monomial(3);
  const auto parts = square_free_decomposition(f);
  ASSERT_EQ(parts.size(), 3U);
  EXPECT_EQ(parts[0], poly({-1, 1}));
  EXPECT_EQ(parts[1], poly({2, 1}));
  EXPECT_EQ(parts[2], poly({0, 1}));
}

TEST(Polynomial, RationalRoots) {
  // (2t - 1)(t + 3)(t^2 + 1)
  const Polynomial f = poly({-1, 2}) * poly({3, 1}) * poly({1, 0, 1});
  EXPECT_EQ(rational_roots(f), (std::vector<Rational>{-3, Rational(1, 2)}));
  EXPECT_TRUE(rational_roots(poly({1, 0, 1})).empty());
  EXPECT_EQ(rational_roots(poly({0, 0, 1})), (std::vector<Rational>{0}));
}

TEST(Polynomial, MinimalPolynomialAnnihilates) {
  const Matrix nil{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}};
  EXPECT_EQ(minimal_polynomial(nil), Polynomial::monomial(3));
  const Matrix diag{{2, 0, 0}, {0, 2, 0}, {0, 0, 3}};
  EXPECT_EQ(minimal_polynomial(diag), poly({6, -5, 1}));
  std::mt19937_64 rng(2);
  for (int t = 0; t < 10; ++t) {
    const Matrix m = testing::random_matrix(4, 4, rng, 0.5);
    const Polynomial p = minimal_polynomial(m);
    EXPECT_TRUE(p(m).is_zero());
    EXPECT_LE(p.degree(), 4);
  }
}

}  // namespace
}  // namespace e2q
