#pragma once

#include "e2q/isomorphism.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace e2q {

/// A point (x, s): a representation x plus framing maps s_i : W_i -> V_i.
/// framing holds an entry for every weight in the union of x's window and the
/// support of framing_dims.
struct FramedPoint {
  QuiverRep rep;
  DimensionVector framing_dims;
  std::map<int, Matrix> framing;

  friend bool operator==(const FramedPoint&, const FramedPoint&) = default;

  Matrix s(int i) const {
    auto it = framing.find(i);
    return it == framing.end() ? Matrix(rep.dim(i), framing_dims[i]) : it->second;
  }
};

/// Fills the absent framing maps with zeros and checks shapes.
inline FramedPoint make_framed_point(QuiverRep rep, DimensionVector w, std::map<int, Matrix> framing) {
  for (const auto& [i, m] : framing)
    if (m.rows() != rep.dim(i) || m.cols() != w[i])
      throw std::invalid_argument("framing at weight " + std::to_string(i) + " has shape " + m.shape());
  std::vector<int> weights;
  for (int i = rep.window().lo; i <= rep.window().hi; ++i) weights.push_back(i);
  for (int i : w.support()) weights.push_back(i);
  for (int i : weights) framing.try_emplace(i, Matrix(rep.dim(i), w[i]));
  return {std::move(rep), std::move(w), std::move(framing)};
}

/// Per-weight basis (columns) of a graded subspace.
struct GradedSubspace {
  std::map<int, std::vector<Vector>> basis;

  std::size_t dim(int i) const {
    auto it = basis.find(i);
    return it == basis.end() ? 0 : it->second.size();
  }
  std::size_t total() const {
    std::size_t t = 0;
    for (const auto& [i, b] : basis) t += b.size();
    return t;
  }
};

namespace detail {

inline std::vector<Vector> reduced_basis(std::size_t n, const std::vector<Vector>& spanning) {
  if (spanning.empty() || n == 0) return {};
  const auto [r, pivots] = row_echelon(Matrix::from_rows(n, spanning));
  std::vector<Vector> out;
  for (std::size_t i = 0; i < pivots.size(); ++i) out.push_back(r.row(i));
  return out;
}

}  // namespace detail

/// Smallest x-invariant graded subspace containing the seed: images under all
/// arrow maps are added until the dimensions stop growing.
inline GradedSubspace invariant_closure(const QuiverRep& x, const std::map<int, std::vector<Vector>>& seed) {
  GradedSubspace s;
  for (const auto& [i, vs] : seed) {
    for (const auto& v : vs)
      if (v.size() != x.dim(i))
        throw std::invalid_argument("seed vector at weight " + std::to_string(i) + " has wrong length");
    auto b = detail::reduced_basis(x.dim(i), vs);
    if (!b.empty()) s.basis[i] = std::move(b);
  }
  for (std::size_t total = s.total();;) {
    for (const auto& [a, m] : x.maps()) {
      auto it = s.basis.find(a.tail());
      if (it == s.basis.end() || m.rows() == 0) continue;
      std::vector<Vector> span = s.basis[a.head()];
      for (const auto& v : it->second) span.push_back(m * v);
      s.basis[a.head()] = detail::reduced_basis(m.rows(), span);
    }
    for (auto it = s.basis.begin(); it != s.basis.end();) it = it->second.empty() ? s.basis.erase(it) : std::next(it);
    const std::size_t grown = s.total();
    if (grown == total) break;
    total = grown;
  }
  return s;
}

/// Columns of every s_i, as closure seed.
inline std::map<int, std::vector<Vector>> framing_image(const FramedPoint& p) {
  std::map<int, std::vector<Vector>> seed;
  for (const auto& [i, m] : p.framing)
    for (std::size_t c = 0; c < m.cols(); ++c) seed[i].push_back(m.column(c));
  return seed;
}

/// Stable iff the only x-invariant graded subspace containing im s is V.
inline bool is_stable(const FramedPoint& p) {
  const GradedSubspace s = invariant_closure(p.rep, framing_image(p));
  for (int i : p.rep.dims().support())
    if (s.dim(i) != p.rep.dim(i)) return false;
  return true;
}

/// g.(x, s) = (g.x, g s).
inline FramedPoint act(const GradedMap& g, const FramedPoint& p) {
  FramedPoint q{act(g, p.rep), p.framing_dims, p.framing};
  for (auto& [i, m] : q.framing)
    if (m.rows() > 0) m = g.at(i) * m;
  return q;
}

namespace detail {

/// Rows for g_i s_i - t s'_i (t the extra last unknown when with_scale) or the
/// inhomogeneous rows g_i s_i = s'_i, appended to `rows` / `rhs`.
inline void framing_rows(const FramedPoint& p, const FramedPoint& q, const Window& w, std::size_t unknowns,
                         bool with_scale, std::vector<Vector>& rows, Vector& rhs) {
  std::map<int, std::size_t> off;
  std::size_t o = 0;
  for (int i = w.lo; i <= w.hi; ++i) {
    off[i] = o;
    o += q.rep.dim(i) * p.rep.dim(i);
  }
  for (int i = w.lo; i <= w.hi; ++i) {
    const Matrix sp = p.s(i), sq = q.s(i);
    const std::size_t n = p.rep.dim(i);
    for (std::size_t r = 0; r < q.rep.dim(i); ++r)
      for (std::size_t c = 0; c < sp.cols(); ++c) {
        Vector row(unknowns);
        for (std::size_t k = 0; k < n; ++k) row[off[i] + r * n + k] = sp(k, c);
        if (with_scale) row[unknowns - 1] = -sq(r, c);
        rows.push_back(std::move(row));
        rhs.push_back(with_scale ? Rational(0) : sq(r, c));
      }
  }
}

inline Window framed_window(const FramedPoint& p, const FramedPoint& q) {
  Window w = window_union(p.rep.window(), q.rep.window());
  for (const auto& fp : {p, q})
    if (!fp.framing_dims.is_zero())
      w = window_union(w, Window{fp.framing_dims.min_weight(), fp.framing_dims.max_weight()});
  return w;
}

}  // namespace detail

/// Kernel of {g x = x g, g_i s_i = t s_i} in the unknowns (g, t). For a stable
/// point this is one-dimensional, spanned by (identity, 1).
struct FramedStabilizer {
  std::vector<GradedMap> maps;
  std::vector<Rational> scales;
  std::size_t dimension() const { return maps.size(); }
};

inline FramedStabilizer framed_stabilizer(const FramedPoint& p) {
  const Window w = detail::framed_window(p, p);
  const Matrix inter = intertwiner_system(p.rep, p.rep, w);
  const std::size_t unknowns = inter.cols() + 1;
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < inter.rows(); ++r) {
    Vector row = inter.row(r);
    row.push_back(0);
    rows.push_back(std::move(row));
  }
  Vector rhs;
  detail::framing_rows(p, p, w, unknowns, true, rows, rhs);
  const GradedMap shape = zero_graded_map(p.rep, p.rep, w);
  FramedStabilizer st;
  for (Vector v : kernel_basis(Matrix::from_rows(unknowns, rows))) {
    st.scales.push_back(v.back());
    v.pop_back();
    st.maps.push_back(unflatten(v, shape));
  }
  return st;
}

struct FramedEquivalence {
  bool equivalent = false;
  IsoMethod method = IsoMethod::deterministic;
  std::optional<GradedMap> witness;
};

/// Is there an invertible intertwiner g with g.x = x' and g s = s'? Solves the
/// affine system; when its direction space is trivial (always the case for
/// stable points) the unique solution is tested directly, otherwise the
/// is_isomorphic search policy applies.
inline FramedEquivalence framed_equivalent(const FramedPoint& p, const FramedPoint& q, const IsoOptions& opts = {}) {
  if (!(p.rep.dims() == q.rep.dims()) || !(p.framing_dims == q.framing_dims))
    throw std::invalid_argument("framed_equivalent: dimension vectors differ");
  const Window w = detail::framed_window(p, q);
  const Matrix inter = intertwiner_system(p.rep, q.rep, w);
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < inter.rows(); ++r) rows.push_back(inter.row(r));
  Vector rhs(rows.size());
  detail::framing_rows(p, q, w, inter.cols(), false, rows, rhs);
  const Matrix system = Matrix::from_rows(inter.cols(), rows);
  FramedEquivalence res;
  const auto particular = solve(system, rhs);
  if (!particular) return res;
  const GradedMap shape = zero_graded_map(p.rep, q.rep, w);
  std::vector<GradedMap> directions;
  for (const Vector& v : kernel_basis(system)) directions.push_back(unflatten(v, shape));
  res.witness = search_invertible(unflatten(*particular, shape), directions, p.rep.total_dim(), opts, res.method);
  res.equivalent = res.witness.has_value();
  return res;
}

}  // namespace e2q
