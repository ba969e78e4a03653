#pragma once

// Test-only oracles. Nothing here calls the elimination code it checks.

#include "e2q/e2q.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace e2q::testing {

/// Leibniz expansion over all permutations.
inline Rational leibniz_det(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Rational term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n && sgn(term) != 0; ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Largest k with a nonzero k x k minor, by enumerating row and column subsets.
inline std::size_t rank_by_minors(const Matrix& m) {
  const std::size_t r = m.rows(), c = m.cols();
  for (std::size_t k = std::min(r, c); k > 0; --k) {
    std::vector<bool> rs(r, false), cs(c, false);
    std::fill(rs.begin(), rs.begin() + static_cast<long>(k), true);
    do {
      std::fill(cs.begin(), cs.end(), false);
      std::fill(cs.begin(), cs.begin() + static_cast<long>(k), true);
      do {
        Matrix sub(k, k);
        std::size_t si = 0;
        for (std::size_t i = 0; i < r; ++i) {
          if (!rs[i]) continue;
          std::size_t sj = 0;
          for (std::size_t j = 0; j < c; ++j)
            if (cs[j]) sub(si, sj++) = m(i, j);
          ++si;
        }
        if (sgn(leibniz_det(sub)) != 0) return k;
      } while (std::prev_permutation(cs.begin(), cs.end()));
    } while (std::prev_permutation(rs.begin(), rs.end()));
  }
  return 0;
}

/// Random small rational matrix; `sparsity` of the entries are zero.
inline Matrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng, double sparsity = 0.3) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
  std::bernoulli_distribution zero(sparsity);
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      if (zero(rng)) continue;
      const int n = num(rng);
      const int d = den(rng);
      m(i, j) = Rational(n, d);
      m(i, j).canonicalize();
    }
  return m;
}

/// Low-rank random matrix: product of random factors of inner size k.
inline Matrix random_low_rank(std::size_t rows, std::size_t cols, std::size_t k, std::mt19937_64& rng) {
  return random_matrix(rows, k, rng, 0.0) * random_matrix(k, cols, rng, 0.0);
}

/// The all-zero thin point on w (every pair "none").
inline QuiverRep zero_thin(const Window& w) {
  return thin_rep(w, std::vector<PairChoice>(static_cast<std::size_t>(w.width()), PairChoice::none));
}

}  // namespace e2q::testing
