#pragma once

#include "e2q/hom.hpp"
#include "e2q/polynomial.hpp"

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace e2q {

/// End(x) with structure constants and its Jacobson radical.
///
/// product[i][j] holds the coordinates of basis[i] * basis[j] (apply basis[j]
/// first). The radical is computed with the characteristic-zero criterion
/// J = {a : tr(L_{ab}) = 0 for all b}, L the left regular representation.
struct EndAlgebra {
  QuiverRep rep;
  std::vector<GradedMap> basis;
  std::vector<std::vector<Vector>> product;
  std::vector<Vector> radical;  // coordinate vectors spanning J
  std::size_t radical_dim = 0;
  std::size_t semisimple_quotient_dim = 0;

  std::size_t dimension() const { return basis.size(); }

  /// Coordinates of an element of End(x) in `basis`.
  Vector coordinates(const GradedMap& g) const {
    const Matrix c = coordinates_in(basis_columns, Matrix::from_columns(flatten(g).size(), {flatten(g)}));
    return c.column(0);
  }

  GradedMap element(const Vector& coords) const {
    GradedMap g = zero_graded_map(rep, rep, rep.window());
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (sgn(coords[k]) != 0) g = g + coords[k] * basis[k];
    return g;
  }

  Matrix basis_columns;  // flattened basis elements
};

inline EndAlgebra end_algebra(const QuiverRep& x) {
  if (x.total_dim() == 0) throw std::invalid_argument("end_algebra: zero representation");
  EndAlgebra e;
  e.rep = x;
  e.basis = hom_basis(x, x).basis;
  const std::size_t n = e.basis.size();
  std::vector<Vector> cols;
  for (const auto& b : e.basis) cols.push_back(flatten(b));
  e.basis_columns = Matrix::from_columns(cols.front().size(), cols);

  // Solve for all n^2 products in one elimination.
  std::vector<Vector> prods;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) prods.push_back(flatten(compose(e.basis[i], e.basis[j])));
  const Matrix coords = coordinates_in(e.basis_columns, Matrix::from_columns(cols.front().size(), prods));
  e.product.assign(n, std::vector<Vector>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) e.product[i][j] = coords.column(i * n + j);

  // tr(L_{b_k}) = sum_j c_{kj}^j ; tr(L_{b_i b_j}) = sum_k c_{ij}^k tr(L_{b_k})
  Vector left_trace(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j) left_trace[k] += e.product[k][j][j];
  Matrix form(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) form(i, j) += e.product[i][j][k] * left_trace[k];
  e.radical = kernel_basis(form);
  e.radical_dim = e.radical.size();
  e.semisimple_quotient_dim = n - e.radical_dim;
  return e;
}

namespace detail {

inline bool is_idempotent(const GradedMap& e) { return compose(e, e) == e; }

inline bool is_nilpotent_map(const GradedMap& g) {
  for (const auto& [i, m] : g)
    if (!is_nilpotent_matrix(m)) return false;
  return true;
}

inline bool is_nontrivial(const GradedMap& e, const GradedMap& id) { return !is_zero(e) && !(e == id); }

inline GradedMap evaluate(const Polynomial& p, const GradedMap& g) {
  GradedMap out;
  for (const auto& [i, m] : g) out.emplace(i, p(m));
  return out;
}

/// e <- 3e^2 - 2e^3 until exactly idempotent; requires e^2 - e nilpotent.
inline std::optional<GradedMap> lift_idempotent(GradedMap e, std::size_t max_steps = 64) {
  for (std::size_t step = 0; step < max_steps; ++step) {
    const GradedMap e2 = compose(e, e);
    if (e2 == e) return e;
    const GradedMap e3 = compose(e2, e);
    e = Rational(3) * e2 - Rational(2) * e3;
  }
  return std::nullopt;
}

/// Minimal polynomial of a graded map: lcm of the block minimal polynomials.
inline Polynomial minimal_polynomial(const GradedMap& g) {
  Polynomial m = Polynomial::constant(1);
  for (const auto& [i, b] : g)
    if (b.rows() > 0) m = lcm(m, e2q::minimal_polynomial(b));
  return m;
}

/// Splits the minimal polynomial of phi into two coprime monic factors f*g,
/// first by square-free decomposition, then by peeling off a rational root.
inline std::optional<std::pair<Polynomial, Polynomial>> coprime_factorization(const Polynomial& minpoly) {
  if (minpoly.degree() < 2) return std::nullopt;
  const auto parts = square_free_decomposition(minpoly);
  std::vector<Polynomial> powers;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].degree() < 1) continue;
    Polynomial p = Polynomial::constant(1);
    for (std::size_t k = 0; k <= i; ++k) p = p * parts[i];
    powers.push_back(p);
  }
  if (powers.size() >= 2) {
    Polynomial rest = minpoly / powers.front();
    return std::make_pair(powers.front(), rest.monic());
  }
  // minpoly = P^k with P square-free
  std::size_t multiplicity = 0;
  Polynomial base;
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (parts[i].degree() >= 1) {
      base = parts[i];
      multiplicity = i + 1;
    }
  if (base.degree() < 2) return std::nullopt;
  const auto roots = rational_roots(base);
  if (roots.empty()) return std::nullopt;
  Polynomial f = Polynomial::constant(1), g = Polynomial::constant(1);
  const Polynomial lin = Polynomial::linear_root(roots.front());
  const Polynomial cofactor = base / lin;
  for (std::size_t k = 0; k < multiplicity; ++k) {
    f = f * lin;
    g = g * cofactor;
  }
  return std::make_pair(f, g.monic());
}

/// Projection onto the generalized eigenspace cut out by the first coprime
/// factor of phi's minimal polynomial: e = (v g)(phi) where u f + v g = 1.
inline std::optional<GradedMap> spectral_idempotent(const GradedMap& phi) {
  const auto split = coprime_factorization(minimal_polynomial(phi));
  if (!split) return std::nullopt;
  const auto& [f, g] = *split;
  const Bezout b = extended_gcd(f, g);
  if (b.g.degree() != 0) return std::nullopt;
  return evaluate(b.v * g, phi);
}

}  // namespace detail

/// Search order: (1) exact idempotent basis elements; (2) basis elements that
/// are idempotent modulo nilpotents, lifted; (3) spectral idempotents of basis
/// elements, then of pairwise sums b_i + b_j (i < j), then of two fixed
/// generic combinations. Deterministic.
inline std::optional<GradedMap> find_idempotent(const EndAlgebra& end) {
  const GradedMap id = identity_map(end.rep);
  const auto& basis = end.basis;
  for (const auto& b : basis)
    if (detail::is_idempotent(b) && detail::is_nontrivial(b, id)) return b;
  for (const auto& b : basis) {
    if (detail::is_nilpotent_map(b) || detail::is_nilpotent_map(id - b)) continue;
    if (!detail::is_nilpotent_map(compose(b, b) - b)) continue;
    if (auto e = detail::lift_idempotent(b); e && detail::is_nontrivial(*e, id)) return e;
  }
  auto try_candidate = [&](const GradedMap& phi) -> std::optional<GradedMap> {
    auto e = detail::spectral_idempotent(phi);
    if (e && detail::is_idempotent(*e) && detail::is_nontrivial(*e, id)) return e;
    return std::nullopt;
  };
  for (const auto& b : basis)
    if (auto e = try_candidate(b)) return e;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (auto e = try_candidate(basis[i] + basis[j])) return e;
  Vector linear(basis.size()), quadratic(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    linear[k] = static_cast<long>(k + 1);
    quadratic[k] = static_cast<long>((k % 2 == 0 ? 1 : -1) * (k + 2) * (k + 2));
  }
  for (const auto& coords : {linear, quadratic})
    if (auto e = try_candidate(end.element(coords))) return e;
  return std::nullopt;
}

/// The subrepresentation on im(e) for an idempotent e in End(x), in the basis
/// given by the pivot columns of each block e_i.
inline QuiverRep image_subrep(const QuiverRep& x, const GradedMap& e) {
  std::map<int, Matrix> bases;
  DimensionVector dims;
  for (int i = x.window().lo; i <= x.window().hi; ++i) {
    const auto cols = column_space_basis(e.at(i));
    dims.set(i, cols.size());
    bases.emplace(i, Matrix::from_columns(x.dim(i), cols));
  }
  QuiverRep sub(x.window(), dims);
  for (const auto& [a, m] : x.maps())
    sub.set_map(a, coordinates_in(bases.at(a.head()), m * bases.at(a.tail())));
  return trim(sub);
}

/// x = im(e) + im(1 - e) for the first nontrivial idempotent found.
inline std::optional<std::pair<QuiverRep, QuiverRep>> split(const QuiverRep& x) {
  if (x.total_dim() == 0) return std::nullopt;
  const EndAlgebra end = end_algebra(x);
  if (end.semisimple_quotient_dim <= 1) return std::nullopt;
  const auto e = find_idempotent(end);
  if (!e) return std::nullopt;
  return std::make_pair(image_subrep(x, *e), image_subrep(x, identity_map(x) - *e));
}

enum class Decomposability { indecomposable, decomposable, unresolved };

struct IndecomposabilityVerdict {
  Decomposability kind = Decomposability::indecomposable;
  std::optional<GradedMap> idempotent;  // witness when decomposable
  std::size_t end_dim = 0;
  std::size_t quotient_dim = 0;
  bool quotient_commutative = false;
};

/// Indecomposable when End/J is one-dimensional (End is local; this holds
/// over every extension field too). Unresolved means End/J is larger but no
/// rational idempotent was found, so x may still split over an extension.
inline IndecomposabilityVerdict is_indecomposable(const QuiverRep& x) {
  const EndAlgebra end = end_algebra(x);
  IndecomposabilityVerdict v;
  v.end_dim = end.dimension();
  v.quotient_dim = end.semisimple_quotient_dim;
  if (end.semisimple_quotient_dim == 1) return v;
  if (auto e = find_idempotent(end)) {
    v.kind = Decomposability::decomposable;
    v.idempotent = std::move(e);
    return v;
  }
  v.kind = Decomposability::unresolved;
  // commutative modulo J iff every commutator of basis elements lies in J
  const Matrix rad = end.radical.empty() ? Matrix(end.dimension(), 0)
                                         : Matrix::from_columns(end.dimension(), end.radical);
  bool commutative = true;
  for (std::size_t i = 0; i < end.dimension() && commutative; ++i)
    for (std::size_t j = i + 1; j < end.dimension() && commutative; ++j) {
      Vector comm(end.dimension());
      for (std::size_t k = 0; k < comm.size(); ++k) comm[k] = end.product[i][j][k] - end.product[j][i][k];
      if (is_zero(comm)) continue;
      commutative = rad.cols() > 0 && solve(rad, comm).has_value();
    }
  v.quotient_commutative = commutative;
  return v;
}

/// Repeated splitting until no part splits further (Krull-Schmidt
/// decomposition when no part is unresolved). Parts are trimmed to their
/// support windows and listed in discovery order.
inline std::vector<QuiverRep> decompose(const QuiverRep& x) {
  std::vector<QuiverRep> done, pending{x};
  while (!pending.empty()) {
    QuiverRep cur = std::move(pending.back());
    pending.pop_back();
    if (cur.total_dim() == 0) continue;
    if (auto parts = split(cur)) {
      pending.push_back(std::move(parts->second));
      pending.push_back(std::move(parts->first));
    } else {
      done.push_back(trim(cur));
    }
  }
  return done;
}

}  // namespace e2q
