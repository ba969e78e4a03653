#include "test_support.hpp"

#include <gtest/gtest.h>

namespace e2q {
namespace {

using testing::leibniz_det;
using testing::random_matrix;
using testing::rank_by_minors;

TEST(Rational, CanonicalText) {
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("-2/-4")), "1/2");
  EXPECT_EQ(to_string(parse_rational("3")), "3");
  EXPECT_EQ(to_string(parse_rational("-1/2")), "-1/2");
  EXPECT_EQ(to_string(parse_rational("0/7")), "0");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(Rational, ArithmeticStaysCanonical) {
  std::mt19937_64 rng(7);
  const Matrix a = random_matrix(6, 6, rng, 0.0);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      const Rational& x = a(i, 0);
      const Rational& y = a(j, 1);
      for (const Rational& r : {Rational(x + y), Rational(x - y), Rational(x * y)}) EXPECT_TRUE(is_canonical(r));
      if (sgn(y) != 0) {
        EXPECT_TRUE(is_canonical(Rational(x / y)));
      }
    }
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(Matrix::identity(2)), 2U);
  EXPECT_EQ(rank(Matrix(0, 5)), 0U);
  EXPECT_EQ(rank(Matrix{{1, 2}, {2, 4}}), 1U);
  EXPECT_EQ(rank(Matrix(5, 0)), 0U);
}

TEST(Rank, AgreesWithMinorEnumeration) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 1 + trial % 4, c = 1 + (trial / 4) % 4;
    const Matrix m = trial % 3 == 0 ? testing::random_low_rank(r, c, 1 + trial % 2, rng) : random_matrix(r, c, rng);
    EXPECT_EQ(rank(m), rank_by_minors(m));
  }
}

TEST(KernelBasis, Examples) {
  EXPECT_TRUE(kernel_basis(Matrix::identity(2)).empty());

  const auto k = kernel_basis(Matrix{{1, -1}});
  ASSERT_EQ(k.size(), 1U);
  EXPECT_EQ(k[0], (Vector{1, 1}));

  const auto z = kernel_basis(Matrix(2, 3));
  ASSERT_EQ(z.size(), 3U);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(z[i], unit_vector(3, i));
}

TEST(KernelBasis, RankNullityAndPivotNormalization) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = 1 + trial % 5, c = 1 + (trial * 7) % 6;
    const Matrix m = trial % 2 ? testing::random_low_rank(r, c, 1 + trial % 3, rng) : random_matrix(r, c, rng, 0.5);
    const auto basis = kernel_basis(m);
    EXPECT_EQ(rank(m) + basis.size(), c);
    for (const auto& v : basis) EXPECT_TRUE(is_zero(m * v));
    if (!basis.empty()) {
      EXPECT_EQ(rank(Matrix::from_columns(c, basis)), basis.size());
    }
    // each basis vector has a distinguished free coordinate equal to 1 where the others vanish
    for (std::size_t i = 0; i < basis.size(); ++i) {
      bool found = false;
      for (std::size_t f = 0; f < c && !found; ++f) {
        if (basis[i][f] != 1) continue;
        bool alone = true;
        for (std::size_t j = 0; j < basis.size(); ++j)
          if (j != i && sgn(basis[j][f]) != 0) alone = false;
        found = alone;
      }
      EXPECT_TRUE(found);
    }
  }
}

TEST(Solve, Examples) {
  EXPECT_EQ(*solve(Matrix::identity(2), {3, 5}), (Vector{3, 5}));

  const Matrix row{{1, -1}};
  const auto x = solve(row, {0});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(row * *x, (Vector{0}));

  EXPECT_FALSE(solve(Matrix{{1}, {1}}, {0, 1}).has_value());
  EXPECT_THROW(solve(Matrix::identity(2), {1}), std::invalid_argument);
}

TEST(Solve, ExactOrInconsistentWithRankJump) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = 1 + trial % 4, c = 1 + (trial / 3) % 4;
    const Matrix m = testing::random_low_rank(r, c, 1 + trial % 2, rng);
    Vector b = random_matrix(r, 1, rng).column(0);
    if (trial % 3 == 0) b = m * random_matrix(c, 1, rng).column(0);
    const auto x = solve(m, b);
    Matrix aug(r, c + 1);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) aug(i, j) = m(i, j);
      aug(i, c) = b[i];
    }
    if (x) {
      EXPECT_EQ(m * *x, b);
    } else {
      EXPECT_GT(rank_by_minors(aug), rank_by_minors(m));
    }
  }
}

TEST(Trace, Examples) {
  EXPECT_EQ(trace(Matrix::identity(3)), 3);
  EXPECT_EQ(trace(Matrix{{0, 1}, {0, 0}}), 0);
  EXPECT_EQ(trace(Matrix{{Rational(1, 2), 0}, {0, Rational(1, 3)}}), Rational(5, 6));
  EXPECT_THROW(trace(Matrix(2, 3)), std::invalid_argument);
}

TEST(Determinant, MatchesLeibniz) {
  std::mt19937_64 rng(5);
  for (std::size_t n = 0; n <= 5; ++n)
    for (int trial = 0; trial < 5; ++trial) {
      const Matrix m = random_matrix(n, n, rng, 0.4);
      EXPECT_EQ(determinant(m), leibniz_det(m));
      if (auto inv = inverse(m)) {
        EXPECT_EQ(m * *inv, Matrix::identity(n));
      } else {
        EXPECT_EQ(leibniz_det(m), 0);
      }
    }
}

TEST(Matrix, EmptyShapesCompose) {
  const Matrix a(3, 0), b(0, 2);
  const Matrix c = a * b;
  EXPECT_EQ(c.rows(), 3U);
  EXPECT_EQ(c.cols(), 2U);
  EXPECT_TRUE(c.is_zero());
  EXPECT_THROW(Matrix(2, 3) * Matrix(2, 3), std::invalid_argument);
}

TEST(CoordinatesIn, RecoversCombination) {
  const Matrix basis{{1, 0}, {1, 1}, {0, 2}};
  const Matrix target = basis * Matrix{{3}, {-1}};
  EXPECT_EQ(coordinates_in(basis, target), (Matrix{{3}, {-1}}));
  EXPECT_THROW(coordinates_in(basis, Matrix{{1}, {0}, {0}}), std::invalid_argument);
}

}  // namespace
}  // namespace e2q
