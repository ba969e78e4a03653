#pragma once

#include "e2q/quiver_rep.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace e2q {

/// For each arrow pair (h_i, hbar_i) of a window with all dimensions 1.
enum class PairChoice { up, down, none };

/// The thin point on w with x_{h_i} = 1 (up), x_{hbar_i} = 1 (down) or both
/// zero (none), choice[k] governing the pair at vertex w.lo + k.
inline QuiverRep thin_rep(const Window& w, const std::vector<PairChoice>& choice) {
  DimensionVector dims;
  for (int i = w.lo; i <= w.hi; ++i) dims.set(i, 1);
  QuiverRep x(w, dims);
  for (int k = 0; k < w.width(); ++k) {
    const int i = w.lo + k;
    if (choice.at(static_cast<std::size_t>(k)) == PairChoice::up) x.set_map(Arrow::h(i), Matrix{{1}});
    if (choice.at(static_cast<std::size_t>(k)) == PairChoice::down) x.set_map(Arrow::hbar(i), Matrix{{1}});
  }
  return x;
}

struct ThinEnumeration {
  std::vector<QuiverRep> indecomposables;
  std::vector<QuiverRep> decomposables;  // only filled on request
};

/// One representative per orbit of relation-satisfying points with dimension 1
/// at every vertex of w. The relations force x_{hbar_i} x_{h_i} = 0 at every
/// pair (inductively from the left end), the torus rescales nonzero entries to
/// 1, and a pair with both maps zero splits the module. Indecomposables are
/// listed by the binary number whose bit k is set when pair k points down
/// (2^width of them); decomposables by the base-3 number in up/down/none.
inline ThinEnumeration enumerate_thin_indecomposables(const Window& w, bool include_decomposables = false) {
  ThinEnumeration out;
  const auto width = static_cast<std::size_t>(w.width());
  std::vector<PairChoice> choice(width);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << width); ++mask) {
    for (std::size_t k = 0; k < width; ++k) choice[k] = (mask >> k) & 1U ? PairChoice::down : PairChoice::up;
    out.indecomposables.push_back(thin_rep(w, choice));
  }
  if (!include_decomposables) return out;
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < width; ++k) total *= 3;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    bool has_none = false;
    for (std::size_t k = 0; k < width; ++k, c /= 3) {
      choice[k] = static_cast<PairChoice>(c % 3);
      has_none = has_none || choice[k] == PairChoice::none;
    }
    if (has_none) out.decomposables.push_back(thin_rep(w, choice));
  }
  return out;
}

/// A thin relation-satisfying point on w with random nonzero rational scalars
/// on the chosen arrows.
inline QuiverRep random_thin_rep(const Window& w, std::mt19937_64& rng, bool allow_none = true) {
  std::uniform_int_distribution<int> pick(0, allow_none ? 2 : 1);
  std::uniform_int_distribution<int> num(1, 9), den(1, 5), sign(0, 1);
  std::vector<PairChoice> choice(static_cast<std::size_t>(w.width()));
  for (auto& c : choice) c = static_cast<PairChoice>(pick(rng));
  QuiverRep x = thin_rep(w, choice);
  for (int k = 0; k < w.width(); ++k) {
    const Arrow a = choice[static_cast<std::size_t>(k)] == PairChoice::up ? Arrow::h(w.lo + k) : Arrow::hbar(w.lo + k);
    if (choice[static_cast<std::size_t>(k)] == PairChoice::none) continue;
    const int n = num(rng);
    const int d = den(rng);
    Rational q(sign(rng) ? n : -n, d);
    q.canonicalize();
    x.set_map(a, Matrix{{q}});
  }
  return x;
}

}  // namespace e2q
