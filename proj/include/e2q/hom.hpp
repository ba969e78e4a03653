#pragma once

#include "e2q/quiver_rep.hpp"

#include <map>
#include <vector>

namespace e2q {

inline GradedMap compose(const GradedMap& after, const GradedMap& before) {
  GradedMap out;
  for (const auto& [i, m] : before) out.emplace(i, after.at(i) * m);
  return out;
}

inline GradedMap operator+(GradedMap a, const GradedMap& b) {
  for (auto& [i, m] : a) m += b.at(i);
  return a;
}

inline GradedMap operator-(GradedMap a, const GradedMap& b) {
  for (auto& [i, m] : a) m -= b.at(i);
  return a;
}

inline GradedMap operator*(const Rational& s, GradedMap a) {
  for (auto& [i, m] : a) m *= s;
  return a;
}

inline bool is_zero(const GradedMap& g) {
  for (const auto& [i, m] : g)
    if (!m.is_zero()) return false;
  return true;
}

/// Concatenation of the row-major entries of every block, in vertex order.
inline Vector flatten(const GradedMap& g) {
  Vector v;
  for (const auto& [i, m] : g) v.insert(v.end(), m.data().begin(), m.data().end());
  return v;
}

/// Inverse of flatten for a known block layout.
inline GradedMap unflatten(const Vector& v, const GradedMap& shape) {
  GradedMap g;
  std::size_t o = 0;
  for (const auto& [i, s] : shape) {
    Matrix m(s.rows(), s.cols());
    for (std::size_t r = 0; r < s.rows(); ++r)
      for (std::size_t c = 0; c < s.cols(); ++c) m(r, c) = v.at(o++);
    g.emplace(i, std::move(m));
  }
  return g;
}

/// Block-diagonal matrix on the total space.
inline Matrix block_diagonal(const GradedMap& g) {
  std::size_t rows = 0, cols = 0;
  for (const auto& [i, m] : g) {
    rows += m.rows();
    cols += m.cols();
  }
  Matrix out(rows, cols);
  std::size_t ro = 0, co = 0;
  for (const auto& [i, m] : g) {
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) out(ro + r, co + c) = m(r, c);
    ro += m.rows();
    co += m.cols();
  }
  return out;
}

/// Product of the block determinants; zero-size blocks contribute 1.
inline Rational graded_determinant(const GradedMap& g) {
  Rational d = 1;
  for (const auto& [i, m] : g) {
    if (!m.square()) return 0;
    d *= determinant(m);
    if (sgn(d) == 0) break;
  }
  return d;
}

inline bool is_invertible(const GradedMap& g) { return sgn(graded_determinant(g)) != 0; }

struct HomSpace {
  QuiverRep source;
  QuiverRep target;
  Window window;                 // vertices carrying a component g_i
  std::vector<GradedMap> basis;  // each g_i : source_i -> target_i

  std::size_t dimension() const { return basis.size(); }
};

/// Shape template (zero blocks) for graded maps x -> y over window w.
inline GradedMap zero_graded_map(const QuiverRep& x, const QuiverRep& y, const Window& w) {
  GradedMap g;
  for (int i = w.lo; i <= w.hi; ++i) g.emplace(i, Matrix(y.dim(i), x.dim(i)));
  return g;
}

/// Linear system in the entries of (g_i) whose solutions are exactly the
/// intertwiners g_head x_a = y_a g_tail. Columns follow flatten's layout.
inline Matrix intertwiner_system(const QuiverRep& x, const QuiverRep& y, const Window& w) {
  std::map<int, std::size_t> off;
  std::size_t unknowns = 0;
  for (int i = w.lo; i <= w.hi; ++i) {
    off[i] = unknowns;
    unknowns += y.dim(i) * x.dim(i);
  }
  std::vector<Vector> rows;
  for (const Arrow& a : double_arrows(w)) {
    const int t = a.tail(), h = a.head();
    const Matrix xa = x.map_or_zero(a), ya = y.map_or_zero(a);
    const std::size_t xt = x.dim(t), xh = x.dim(h), yt = y.dim(t), yh = y.dim(h);
    // entry (r, c) of g_h x_a - y_a g_t, with r < yh, c < xt
    for (std::size_t r = 0; r < yh; ++r)
      for (std::size_t c = 0; c < xt; ++c) {
        Vector row(unknowns);
        for (std::size_t k = 0; k < xh; ++k) row[off[h] + r * xh + k] += xa(k, c);
        for (std::size_t k = 0; k < yt; ++k) row[off[t] + k * xt + c] -= ya(r, k);
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
  }
  return Matrix::from_rows(unknowns, rows);
}

/// Basis of Hom(x, y): kernel of the intertwiner system over the union window.
inline HomSpace hom_basis(const QuiverRep& x, const QuiverRep& y) {
  const Window w = window_union(x.window(), y.window());
  const GradedMap shape = zero_graded_map(x, y, w);
  HomSpace hom{x, y, w, {}};
  for (const Vector& v : kernel_basis(intertwiner_system(x, y, w))) hom.basis.push_back(unflatten(v, shape));
  return hom;
}

inline std::size_t hom_dimension(const QuiverRep& x, const QuiverRep& y) {
  const Window w = window_union(x.window(), y.window());
  const Matrix sys = intertwiner_system(x, y, w);
  return sys.cols() - rank(sys);
}

inline bool is_intertwiner(const GradedMap& g, const QuiverRep& x, const QuiverRep& y) {
  const Window w = window_union(x.window(), y.window());
  for (const Arrow& a : double_arrows(w))
    if (!(g.at(a.head()) * x.map_or_zero(a) == y.map_or_zero(a) * g.at(a.tail()))) return false;
  return true;
}

}  // namespace e2q
