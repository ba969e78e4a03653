#pragma once

#include "e2q/hom.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace e2q {

struct IsoOptions {
  std::uint64_t seed = 0;
  /// Monte Carlo trials; the coefficient range doubles after each one.
  std::size_t trials = 20;
  /// Evaluate on a full grid {0..n}^h instead (n = total dimension, h = number
  /// of free coordinates). Deterministic, but exponential in h.
  bool exhaustive = false;
  std::size_t exhaustive_limit = 2'000'000;
};

enum class IsoMethod { dimension_mismatch, invariant_mismatch, deterministic, monte_carlo, exhaustive };

inline std::string to_string(IsoMethod m) {
  switch (m) {
    case IsoMethod::dimension_mismatch: return "dimension-mismatch";
    case IsoMethod::invariant_mismatch: return "invariant-mismatch";
    case IsoMethod::deterministic: return "deterministic";
    case IsoMethod::monte_carlo: return "monte-carlo";
    case IsoMethod::exhaustive: return "exhaustive";
  }
  return "unknown";
}

struct IsoResult {
  bool isomorphic = false;
  IsoMethod method = IsoMethod::deterministic;
  std::optional<GradedMap> witness;
};

/// Looks for an invertible element of the affine family offset + sum c_k basis_k.
///
/// det is a polynomial of degree <= degree in the c_k. Monte Carlo: a nonzero
/// polynomial vanishes at a uniform point of S^h with probability at most
/// degree/|S| (Schwartz-Zippel), so each failed trial with |S| = 2R+1 > 2*degree
/// halves the chance of a false "no". Exhaustive: a nonzero polynomial of
/// degree <= n cannot vanish on all of {0..n}^h.
inline std::optional<GradedMap> search_invertible(const GradedMap& offset, const std::vector<GradedMap>& basis,
                                                  std::size_t degree, const IsoOptions& opts, IsoMethod& method) {
  auto combine = [&](const std::vector<long>& c) {
    GradedMap g = offset;
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (c[k] != 0) g = g + Rational(c[k]) * basis[k];
    return g;
  };
  const std::size_t h = basis.size();
  if (h == 0) {
    method = IsoMethod::deterministic;
    return is_invertible(offset) ? std::optional<GradedMap>(offset) : std::nullopt;
  }
  if (opts.exhaustive) {
    method = IsoMethod::exhaustive;
    const std::size_t side = degree + 1;
    double cells = 1;
    for (std::size_t k = 0; k < h; ++k) cells *= static_cast<double>(side);
    if (cells > static_cast<double>(opts.exhaustive_limit))
      throw std::runtime_error("exhaustive search needs " + std::to_string(static_cast<long double>(cells)) +
                               " evaluations, above the limit of " + std::to_string(opts.exhaustive_limit));
    std::vector<long> c(h, 0);
    for (;;) {
      GradedMap g = combine(c);
      if (is_invertible(g)) return g;
      std::size_t k = 0;
      while (k < h && ++c[k] == static_cast<long>(side)) c[k++] = 0;
      if (k == h) return std::nullopt;
    }
  }
  method = IsoMethod::monte_carlo;
  std::mt19937_64 rng(opts.seed);
  long range = static_cast<long>(degree) + 1;
  for (std::size_t t = 0; t < opts.trials; ++t) {
    std::uniform_int_distribution<long> dist(-range, range);
    std::vector<long> c(h);
    for (auto& ck : c) ck = dist(rng);
    GradedMap g = combine(c);
    if (is_invertible(g)) return g;
    if (range < (1L << 40)) range *= 2;
  }
  return std::nullopt;
}

/// Decides x ~= y: an invertible intertwiner exists. Cheap invariants first,
/// then a deterministic test when dim Hom <= 1, otherwise Monte Carlo (one-sided:
/// "true" always comes with a verified witness) or the exhaustive grid.
inline IsoResult is_isomorphic(const QuiverRep& x, const QuiverRep& y, const IsoOptions& opts = {}) {
  IsoResult res;
  if (!(x.dims() == y.dims())) {
    res.method = IsoMethod::dimension_mismatch;
    return res;
  }
  const HomSpace hom = hom_basis(x, y);
  if (hom.dimension() != hom_dimension(y, x) || hom_dimension(x, x) != hom_dimension(y, y)) {
    res.method = IsoMethod::invariant_mismatch;
    return res;
  }
  const GradedMap zero = zero_graded_map(x, y, hom.window);
  if (hom.dimension() <= 1) {
    res.method = IsoMethod::deterministic;
    const GradedMap candidate = hom.basis.empty() ? zero : hom.basis.front();
    if (is_invertible(candidate)) {
      res.isomorphic = true;
      res.witness = candidate;
    }
    return res;
  }
  res.witness = search_invertible(zero, hom.basis, x.total_dim(), opts, res.method);
  res.isomorphic = res.witness.has_value();
  return res;
}

}  // namespace e2q
