#include "test_support.hpp"

#include <gtest/gtest.h>

namespace e2q {
namespace {

QuiverRep simple_at(int k, std::size_t n = 1) { return QuiverRep(Window(k, k), DimensionVector::unit(k, n)); }

QuiverRep up_pair() { return thin_rep(Window(0, 1), {PairChoice::up}); }
QuiverRep down_pair() { return thin_rep(Window(0, 1), {PairChoice::down}); }

TEST(QuiverRep, ShapesAreEnforced) {
  QuiverRep x(Window(0, 1), DimensionVector{{0, 2}, {1, 1}});
  EXPECT_EQ(x.map(Arrow::h(0)).rows(), 1U);
  EXPECT_EQ(x.map(Arrow::h(0)).cols(), 2U);
  EXPECT_THROW(x.set_map(Arrow::h(0), Matrix(2, 1)), std::invalid_argument);
  EXPECT_THROW(x.set_map(Arrow::h(1), Matrix(0, 1)), std::out_of_range);
  EXPECT_THROW(QuiverRep(Window(0, 1), DimensionVector::unit(2)), std::invalid_argument);
  // arrows into zero spaces still carry 0-row matrices
  QuiverRep gap(Window(0, 2), DimensionVector{{0, 1}, {2, 1}});
  EXPECT_EQ(gap.map(Arrow::h(0)).rows(), 0U);
  EXPECT_EQ(gap.map(Arrow::h(0)).cols(), 1U);
}

TEST(CheckRelations, Examples) {
  EXPECT_TRUE(check_relations(testing::zero_thin(Window(0, 4))).empty());

  QuiverRep bad(Window(0, 1), DimensionVector{{0, 1}, {1, 1}});
  bad.set_map(Arrow::h(0), Matrix{{1}});
  bad.set_map(Arrow::hbar(0), Matrix{{1}});
  EXPECT_EQ(check_relations(bad), (std::vector<int>{0, 1}));

  for (const auto& x : enumerate_thin_indecomposables(Window(0, 4)).indecomposables)
    EXPECT_TRUE(check_relations(x).empty());
}

TEST(IsNilpotent, Examples) {
  EXPECT_TRUE(is_nilpotent(testing::zero_thin(Window(0, 3))));
  QuiverRep loop(Window(0, 1), DimensionVector{{0, 1}, {1, 1}});
  loop.set_map(Arrow::h(0), Matrix{{1}});
  loop.set_map(Arrow::hbar(0), Matrix{{1}});
  EXPECT_FALSE(is_nilpotent(loop));
  for (const auto& x : enumerate_thin_indecomposables(Window(0, 4)).indecomposables) EXPECT_TRUE(is_nilpotent(x));
}

// Every thin relation-satisfying point on a window of width <= 5 is nilpotent.
TEST(IsNilpotent, ThinRelationPointsExhaustively) {
  const std::vector<Rational> values{0, 1, -2};
  std::size_t checked = 0;
  for (int width = 0; width <= 5; ++width) {
    const Window w(0, width);
    const std::size_t arrows = 2 * static_cast<std::size_t>(width);
    // every dims pattern in {0,1}^(width+1) for small windows, all ones beyond
    const std::uint64_t patterns = width <= 3 ? (std::uint64_t{1} << (width + 1)) : 1;
    for (std::uint64_t pat = 0; pat < patterns; ++pat) {
      DimensionVector dims;
      for (int i = 0; i <= width; ++i) dims.set(i, width <= 3 ? (pat >> i) & 1U : 1);
      if (dims.is_zero()) continue;
      std::uint64_t combos = 1;
      for (std::size_t a = 0; a < arrows; ++a) combos *= values.size();
      for (std::uint64_t code = 0; code < combos; ++code) {
        QuiverRep x(w, dims);
        std::uint64_t c = code;
        bool skip = false;
        for (const Arrow& a : double_arrows(w)) {
          const Rational& v = values[c % values.size()];
          c /= values.size();
          const Matrix& m = x.map(a);
          if (m.rows() == 0 || m.cols() == 0) {
            if (sgn(v) != 0) skip = true;  // same point reached with value 0
            continue;
          }
          x.set_map(a, Matrix{{v}});
        }
        if (skip || !check_relations(x).empty()) continue;
        ++checked;
        ASSERT_TRUE(is_nilpotent(x));
      }
    }
  }
  EXPECT_GT(checked, 1000U);
}

TEST(HomBasis, Examples) {
  EXPECT_EQ(hom_basis(simple_at(0), simple_at(0)).dimension(), 1U);

  // g_1 * 1 = 0 * g_0 and g_0 * 0 = 1 * g_1, so g_1 = 0 and g_0 is free
  const HomSpace h = hom_basis(up_pair(), down_pair());
  ASSERT_EQ(h.dimension(), 1U);
  EXPECT_EQ(h.basis[0].at(0), Matrix{{1}});
  EXPECT_EQ(h.basis[0].at(1), Matrix{{0}});

  for (const auto& x : enumerate_thin_indecomposables(Window(0, 3)).indecomposables)
    EXPECT_EQ(hom_basis(x, direct_sum(x, x)).dimension(), 2 * end_algebra(x).dimension());
}

TEST(HomBasis, IntertwinersAndRankNullity) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 40; ++t) {
    const Window w(0, t % 4);
    const QuiverRep x = random_thin_rep(w, rng), y = direct_sum(random_thin_rep(w, rng), random_thin_rep(w, rng));
    const HomSpace h = hom_basis(x, y);
    for (const auto& g : h.basis) EXPECT_TRUE(is_intertwiner(g, x, y));
    std::size_t unknowns = 0;
    for (int i = w.lo; i <= w.hi; ++i) unknowns += x.dim(i) * y.dim(i);
    EXPECT_EQ(h.dimension(), unknowns - rank(intertwiner_system(x, y, w)));
    if (!h.basis.empty()) {
      std::vector<Vector> flat;
      for (const auto& g : h.basis) flat.push_back(flatten(g));
      EXPECT_EQ(rank(Matrix::from_columns(flat.front().size(), flat)), h.dimension());
    }
  }
}

TEST(EndAlgebra, Examples) {
  const EndAlgebra one = end_algebra(simple_at(0));
  EXPECT_EQ(one.dimension(), 1U);
  EXPECT_EQ(one.radical_dim, 0U);
  EXPECT_EQ(one.semisimple_quotient_dim, 1U);

  const EndAlgebra m2 = end_algebra(simple_at(0, 2));
  EXPECT_EQ(m2.dimension(), 4U);
  EXPECT_EQ(m2.radical_dim, 0U);
  EXPECT_EQ(m2.semisimple_quotient_dim, 4U);

  const EndAlgebra young2 = end_algebra(to_quiver(young_module(Partition({2}), 0).module));
  EXPECT_EQ(young2.dimension(), 1U);

  EXPECT_THROW(end_algebra(QuiverRep{}), std::invalid_argument);
}

TEST(EndAlgebra, StructureConstantsAndRadical) {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 25; ++t) {
    const Window w(0, 1 + t % 3);
    QuiverRep x = direct_sum(random_thin_rep(w, rng), random_thin_rep(w, rng));
    x = act(random_base_change(x, rng), x);
    const EndAlgebra e = end_algebra(x);
    // the identity is in the span and products expand exactly
    const Vector id = e.coordinates(identity_map(x));
    EXPECT_EQ(e.element(id), identity_map(x));
    for (std::size_t i = 0; i < e.dimension(); ++i)
      for (std::size_t j = 0; j < e.dimension(); ++j)
        EXPECT_EQ(e.element(e.product[i][j]), compose(e.basis[i], e.basis[j]));
    // radical elements are nilpotent and J is a two-sided ideal
    for (const auto& r : e.radical) {
      const GradedMap a = e.element(r);
      for (const auto& [v, m] : a) EXPECT_TRUE(is_nilpotent_matrix(m));
      for (const auto& b : e.basis) {
        const Matrix rad = Matrix::from_columns(e.dimension(), e.radical);
        EXPECT_TRUE(solve(rad, e.coordinates(compose(a, b))).has_value());
        EXPECT_TRUE(solve(rad, e.coordinates(compose(b, a))).has_value());
      }
    }
    EXPECT_GE(e.semisimple_quotient_dim, 1U);
  }
}

TEST(IsIndecomposable, Examples) {
  for (const auto& x : enumerate_thin_indecomposables(Window(0, 4)).indecomposables) {
    const auto v = is_indecomposable(x);
    EXPECT_EQ(v.kind, Decomposability::indecomposable);
    EXPECT_EQ(v.quotient_dim, 1U);
  }
  const auto vv = is_indecomposable(simple_at(0, 2));
  ASSERT_EQ(vv.kind, Decomposability::decomposable);
  EXPECT_EQ(vv.idempotent->at(0), (Matrix{{1, 0}, {0, 0}}));

  EXPECT_EQ(is_indecomposable(testing::zero_thin(Window(0, 4))).kind, Decomposability::decomposable);
  EXPECT_EQ(decompose(testing::zero_thin(Window(0, 4))).size(), 5U);
  EXPECT_THROW(is_indecomposable(QuiverRep{}), std::invalid_argument);
}

TEST(Split, Examples) {
  const QuiverRep sum = direct_sum(up_pair(), down_pair());
  const auto parts = split(sum);
  ASSERT_TRUE(parts.has_value());
  EXPECT_EQ(parts->first.dims() + parts->second.dims(), sum.dims());
  EXPECT_TRUE(is_isomorphic(direct_sum(parts->first, parts->second), sum).isomorphic);

  EXPECT_FALSE(split(to_quiver(young_module(Partition({2, 1}), 0).module)).has_value());

  const auto simples = split(simple_at(0, 2));
  ASSERT_TRUE(simples.has_value());
  EXPECT_EQ(simples->first.dims(), DimensionVector::unit(0));
  EXPECT_EQ(simples->second.dims(), DimensionVector::unit(0));
}

TEST(Split, PartsReassembleToTheInput) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 30; ++t) {
    const Window w(t % 2, 2 + t % 3);
    QuiverRep x = direct_sum(random_thin_rep(w, rng, false), random_thin_rep(Window(0, t % 3), rng, false));
    x = act(random_base_change(x, rng), x);
    const auto parts = split(x);
    ASSERT_TRUE(parts.has_value());
    EXPECT_TRUE(check_relations(parts->first).empty());
    EXPECT_TRUE(check_relations(parts->second).empty());
    EXPECT_TRUE(is_isomorphic(direct_sum(parts->first, parts->second), x, {static_cast<std::uint64_t>(t)}).isomorphic);
  }
}

TEST(Split, LocalEndomorphismRingsNeverSplit) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& lambda : partitions_of(n)) {
      const QuiverRep x = to_quiver(young_module(lambda, 0).module);
      if (end_algebra(x).semisimple_quotient_dim == 1) {
        EXPECT_FALSE(split(x).has_value());
      }
    }
}

TEST(Split, IdempotentLiftingFromPerturbedCandidate) {
  // e + n with n nilpotent commuting with e is idempotent only modulo the radical
  const GradedMap e{{0, Matrix{{1, 1, 0}, {0, 1, 0}, {0, 0, 0}}}};
  const auto lifted = detail::lift_idempotent(e);
  ASSERT_TRUE(lifted.has_value());
  EXPECT_EQ(compose(*lifted, *lifted), *lifted);
  EXPECT_EQ(trace(lifted->at(0)), 2);
}

TEST(DirectSum, Examples) {
  const QuiverRep x = up_pair();
  EXPECT_EQ(direct_sum(x, QuiverRep{}), x);
  EXPECT_EQ(direct_sum(QuiverRep{}, x), x);
  EXPECT_EQ(direct_sum(simple_at(0), up_pair()).dims(), (DimensionVector{{0, 2}, {1, 1}}));

  const auto reps = enumerate_thin_indecomposables(Window(0, 2)).indecomposables;
  for (const auto& a : reps)
    for (const auto& b : reps) {
      const std::size_t lhs = end_algebra(direct_sum(a, b)).dimension();
      EXPECT_EQ(lhs, end_algebra(a).dimension() + end_algebra(b).dimension() + hom_dimension(a, b) +
                         hom_dimension(b, a));
    }
}

TEST(DirectSum, DisjointWindowsMerge) {
  const QuiverRep s = direct_sum(simple_at(-2), up_pair());
  EXPECT_EQ(s.window(), Window(-2, 1));
  EXPECT_EQ(s.dim(-1), 0U);
  EXPECT_EQ(s.map(Arrow::h(0)), Matrix{{1}});
}

TEST(IsIsomorphic, Examples) {
  const QuiverRep x = up_pair();
  EXPECT_TRUE(is_isomorphic(x, x).isomorphic);
  EXPECT_FALSE(is_isomorphic(up_pair(), down_pair()).isomorphic);
  EXPECT_FALSE(is_isomorphic(up_pair(), simple_at(0)).isomorphic);

  std::mt19937_64 rng(37);
  for (int t = 0; t < 10; ++t) {
    QuiverRep big = direct_sum(direct_sum(up_pair(), up_pair()), down_pair());
    const QuiverRep moved = act(random_base_change(big, rng), big);
    const auto r = is_isomorphic(big, moved, {static_cast<std::uint64_t>(t)});
    EXPECT_TRUE(r.isomorphic);
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_TRUE(is_intertwiner(*r.witness, big, moved));
    EXPECT_TRUE(is_invertible(*r.witness));
  }
}

TEST(IsIsomorphic, ExhaustiveAgreesWithMonteCarlo) {
  const auto reps = enumerate_thin_indecomposables(Window(0, 2)).indecomposables;
  for (const auto& a : reps)
    for (const auto& b : reps) {
      const QuiverRep x = direct_sum(a, b), y = direct_sum(b, a);
      const auto mc = is_isomorphic(x, y, {1});
      const auto ex = is_isomorphic(x, y, {1, 20, true});
      EXPECT_EQ(mc.isomorphic, ex.isomorphic);
      EXPECT_TRUE(ex.isomorphic);
    }
}

TEST(IsIsomorphic, SameSeedSameTranscript) {
  const QuiverRep x = direct_sum(up_pair(), up_pair());
  std::mt19937_64 rng(41);
  const QuiverRep y = act(random_base_change(x, rng), x);
  EXPECT_EQ(is_isomorphic(x, y, {99}).witness, is_isomorphic(x, y, {99}).witness);
}

TEST(OrbitInvariants, RelationsNilpotencyAndEndDimension) {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 30; ++t) {
    const Window w(-1, 1 + t % 3);
    QuiverRep x = direct_sum(random_thin_rep(w, rng), random_thin_rep(w, rng));
    if (t % 5 == 0) x.set_map(Arrow::hbar(w.lo), x.map(Arrow::hbar(w.lo)) + Matrix{{1, 0}, {0, 1}});
    const QuiverRep y = act(random_base_change(x, rng), x);
    EXPECT_EQ(check_relations(x).empty(), check_relations(y).empty());
    EXPECT_EQ(is_nilpotent(x), is_nilpotent(y));
    const auto r = is_isomorphic(x, y, {static_cast<std::uint64_t>(t)});
    EXPECT_TRUE(r.isomorphic);
    EXPECT_EQ(end_algebra(x).dimension(), end_algebra(y).dimension());
  }
}

}  // namespace
}  // namespace e2q
