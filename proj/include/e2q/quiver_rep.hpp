#pragma once

#include "e2q/matrix.hpp"
#include "e2q/quiver.hpp"

#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace e2q {

/// One matrix per vertex; the shape of a graded map between representations
/// and of elements of the base-change group.
using GradedMap = std::map<int, Matrix>;

/// A representation of the double quiver of a window: a vector space of
/// dimension dims[i] at each vertex and a matrix x_a : V_tail -> V_head for
/// every arrow a. Every arrow carries a matrix, including 0-row or 0-column ones.
class QuiverRep {
 public:
  /// The zero representation.
  QuiverRep() : QuiverRep(Window{0, 0}, DimensionVector{}) {}

  /// All maps zero.
  QuiverRep(Window window, DimensionVector dims) : window_(window), dims_(std::move(dims)) {
    for (int k : dims_.support())
      if (!window_.contains(k))
        throw std::invalid_argument("dimension vector has weight " + std::to_string(k) + " outside the window");
    for (const Arrow& a : double_arrows(window_)) maps_.emplace(a, Matrix(dim(a.head()), dim(a.tail())));
  }

  QuiverRep(Window window, DimensionVector dims, const std::map<Arrow, Matrix>& maps)
      : QuiverRep(window, std::move(dims)) {
    for (const auto& [a, m] : maps) set_map(a, m);
  }

  const Window& window() const { return window_; }
  const DimensionVector& dims() const { return dims_; }
  std::size_t dim(int i) const { return dims_[i]; }
  std::size_t total_dim() const { return dims_.total(); }
  const std::map<Arrow, Matrix>& maps() const { return maps_; }

  const Matrix& map(Arrow a) const {
    auto it = maps_.find(a);
    if (it == maps_.end()) throw std::out_of_range("arrow " + a.name() + " not in window");
    return it->second;
  }

  /// x_a, or the zero map of the right shape when a lies outside the window.
  Matrix map_or_zero(Arrow a) const {
    auto it = maps_.find(a);
    return it == maps_.end() ? Matrix(dim(a.head()), dim(a.tail())) : it->second;
  }

  void set_map(Arrow a, Matrix m) {
    auto it = maps_.find(a);
    if (it == maps_.end()) throw std::out_of_range("arrow " + a.name() + " not in window");
    if (m.rows() != dim(a.head()) || m.cols() != dim(a.tail()))
      throw std::invalid_argument("map for " + a.name() + " has shape " + m.shape() + ", expected " +
                                  std::to_string(dim(a.head())) + "x" + std::to_string(dim(a.tail())));
    it->second = std::move(m);
  }

  friend bool operator==(const QuiverRep&, const QuiverRep&) = default;

 private:
  Window window_;
  DimensionVector dims_;
  std::map<Arrow, Matrix> maps_;
};

/// The matrix x_{hbar_i} x_{h_i} - x_{h_{i-1}} x_{hbar_{i-1}} on V_i, terms
/// dropped at the window ends.
inline Matrix relation_value(const QuiverRep& x, int i) {
  const RelationTerm r = gp_relation(x.window(), i);
  Matrix value(x.dim(i), x.dim(i));
  for (const auto& p : r.positive) value += x.map(p.second) * x.map(p.first);
  for (const auto& p : r.negative) value -= x.map(p.second) * x.map(p.first);
  return value;
}

/// Vertices whose Gelfand-Ponomarev relation fails; empty iff x is a module
/// over the preprojective algebra.
inline std::vector<int> check_relations(const QuiverRep& x) {
  std::vector<int> violated;
  for (int i = x.window().lo; i <= x.window().hi; ++i)
    if (!relation_value(x, i).is_zero()) violated.push_back(i);
  return violated;
}

/// Offsets of each vertex block inside the direct sum of all vertex spaces.
inline std::map<int, std::size_t> block_offsets(const QuiverRep& x) {
  std::map<int, std::size_t> off;
  std::size_t o = 0;
  for (int i = x.window().lo; i <= x.window().hi; ++i) {
    off[i] = o;
    o += x.dim(i);
  }
  return off;
}

/// The endomorphism of the total space whose blocks are the arrow maps.
inline Matrix total_operator(const QuiverRep& x) {
  const auto off = block_offsets(x);
  Matrix a(x.total_dim(), x.total_dim());
  for (const auto& [arrow, m] : x.maps())
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) a(off.at(arrow.head()) + r, off.at(arrow.tail()) + c) = m(r, c);
  return a;
}

/// Blocks of A^n are sums of path evaluations of length n, so x is nilpotent
/// iff A^d = 0 for d the total dimension.
inline bool is_nilpotent(const QuiverRep& x) { return is_nilpotent_matrix(total_operator(x)); }

/// Block-diagonal sum; the window is the union of both windows, except that a
/// zero summand contributes nothing.
inline QuiverRep direct_sum(const QuiverRep& x, const QuiverRep& y) {
  if (y.total_dim() == 0) return x;
  if (x.total_dim() == 0) return y;
  const Window w = window_union(x.window(), y.window());
  QuiverRep s(w, x.dims() + y.dims());
  for (const Arrow& a : double_arrows(w)) {
    const Matrix mx = x.map_or_zero(a), my = y.map_or_zero(a);
    Matrix m(mx.rows() + my.rows(), mx.cols() + my.cols());
    for (std::size_t r = 0; r < mx.rows(); ++r)
      for (std::size_t c = 0; c < mx.cols(); ++c) m(r, c) = mx(r, c);
    for (std::size_t r = 0; r < my.rows(); ++r)
      for (std::size_t c = 0; c < my.cols(); ++c) m(mx.rows() + r, mx.cols() + c) = my(r, c);
    s.set_map(a, std::move(m));
  }
  return s;
}

/// Same representation on the smallest window containing its support.
inline QuiverRep trim(const QuiverRep& x) {
  if (x.total_dim() == 0) return QuiverRep{};
  const Window w = window_of_support(x.dims());
  QuiverRep t(w, x.dims());
  for (const Arrow& a : double_arrows(w)) t.set_map(a, x.map(a));
  return t;
}

/// Base-change action g.x : x_a -> g_head x_a g_tail^{-1}. Every block of g
/// must be invertible.
inline QuiverRep act(const GradedMap& g, const QuiverRep& x) {
  std::map<int, Matrix> inv;
  for (int i = x.window().lo; i <= x.window().hi; ++i) {
    auto gi = inverse(g.at(i));
    if (!gi) throw std::invalid_argument("base change is singular at vertex " + std::to_string(i));
    inv.emplace(i, std::move(*gi));
  }
  QuiverRep y(x.window(), x.dims());
  for (const auto& [a, m] : x.maps()) y.set_map(a, g.at(a.head()) * m * inv.at(a.tail()));
  return y;
}

inline GradedMap identity_map(const QuiverRep& x) {
  GradedMap g;
  for (int i = x.window().lo; i <= x.window().hi; ++i) g.emplace(i, Matrix::identity(x.dim(i)));
  return g;
}

/// Random invertible integer matrix with entries in [-range, range].
inline Matrix random_invertible(std::size_t n, std::mt19937_64& rng, int range = 3) {
  std::uniform_int_distribution<int> dist(-range, range);
  for (;;) {
    Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = dist(rng);
    if (sgn(determinant(m)) != 0) return m;
  }
}

/// A random element of the base-change group of x.
inline GradedMap random_base_change(const QuiverRep& x, std::mt19937_64& rng, int range = 3) {
  GradedMap g;
  for (int i = x.window().lo; i <= x.window().hi; ++i) g.emplace(i, random_invertible(x.dim(i), rng, range));
  return g;
}

}  // namespace e2q
