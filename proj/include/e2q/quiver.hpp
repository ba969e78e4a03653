#pragma once

#include "e2q/dimension_vector.hpp"

#include <algorithm>
#include <compare>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace e2q {

/// The type-A quiver on vertices lo, lo+1, ..., hi with arrows h_i : i -> i+1.
/// Finite windows stand in for the infinite line quiver: every
/// finite-dimensional representation lives on one.
struct Window {
  int lo = 0;
  int hi = 0;

  Window() = default;
  Window(int a, int b) : lo(a), hi(b) {
    if (a > b) throw std::invalid_argument("window [" + std::to_string(a) + "," + std::to_string(b) + "] is empty");
  }

  int width() const { return hi - lo; }
  std::size_t vertex_count() const { return static_cast<std::size_t>(hi - lo) + 1; }
  bool contains(int i) const { return lo <= i && i <= hi; }
  bool contains(const Window& w) const { return lo <= w.lo && w.hi <= hi; }

  friend bool operator==(const Window&, const Window&) = default;
};

inline Window window_union(const Window& a, const Window& b) {
  return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

inline Window window_of_support(const DimensionVector& v) {
  if (v.is_zero()) throw std::invalid_argument("window_of_support: zero dimension vector has no support");
  return {v.min_weight(), v.max_weight()};
}

enum class Orientation { forward, reversed };

/// An arrow of the double quiver: h_i : i -> i+1 (forward) or
/// hbar_i : i+1 -> i (reversed). Ordered forward-before-reversed, then by index.
struct Arrow {
  Orientation orientation = Orientation::forward;
  int index = 0;

  static Arrow h(int i) { return {Orientation::forward, i}; }
  static Arrow hbar(int i) { return {Orientation::reversed, i}; }

  int tail() const { return orientation == Orientation::forward ? index : index + 1; }
  int head() const { return orientation == Orientation::forward ? index + 1 : index; }
  Arrow opposite() const {
    return {orientation == Orientation::forward ? Orientation::reversed : Orientation::forward, index};
  }

  std::string name() const {
    return (orientation == Orientation::forward ? "h" : "hbar") + std::to_string(index);
  }

  friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

inline Arrow parse_arrow(const std::string& name) {
  auto parse_index = [&](std::size_t offset) {
    std::size_t used = 0;
    const std::string digits = name.substr(offset);
    int i = 0;
    try {
      i = std::stoi(digits, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (digits.empty() || used != digits.size()) throw std::invalid_argument("bad arrow name '" + name + "'");
    return i;
  };
  if (name.rfind("hbar", 0) == 0) return Arrow::hbar(parse_index(4));
  if (name.rfind("h", 0) == 0) return Arrow::h(parse_index(1));
  throw std::invalid_argument("bad arrow name '" + name + "'");
}

/// h_lo, ..., h_{hi-1}, then hbar_lo, ..., hbar_{hi-1}.
inline std::vector<Arrow> double_arrows(const Window& w) {
  std::vector<Arrow> arrows;
  for (int i = w.lo; i < w.hi; ++i) arrows.push_back(Arrow::h(i));
  for (int i = w.lo; i < w.hi; ++i) arrows.push_back(Arrow::hbar(i));
  return arrows;
}

/// A length-two path through a vertex: `first` is traversed, then `second`.
struct PathPair {
  Arrow first;
  Arrow second;
  friend bool operator==(const PathPair&, const PathPair&) = default;
};

/// r_i = sum over arrows leaving i of (hbar h) minus sum over arrows entering i
/// of (h hbar), as signed closed length-two paths at i.
struct RelationTerm {
  int vertex = 0;
  std::vector<PathPair> positive;
  std::vector<PathPair> negative;
};

inline RelationTerm gp_relation(const Window& w, int i) {
  if (!w.contains(i))
    throw std::out_of_range("vertex " + std::to_string(i) + " outside window [" + std::to_string(w.lo) + "," +
                            std::to_string(w.hi) + "]");
  RelationTerm r{i, {}, {}};
  if (i < w.hi) r.positive.push_back({Arrow::h(i), Arrow::hbar(i)});
  if (i > w.lo) r.negative.push_back({Arrow::hbar(i - 1), Arrow::h(i - 1)});
  return r;
}

}  // namespace e2q
