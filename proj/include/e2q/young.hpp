#pragma once

#include "e2q/euclidean_module.hpp"
#include "e2q/framed.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace e2q {

/// Weakly decreasing positive parts; the empty partition is allowed.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be non-increasing");
    }
  }

  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  int size() const {
    int n = 0;
    for (int p : parts_) n += p;
    return n;
  }
  /// Box in column i, row j (both 1-based).
  bool contains(int col, int row) const {
    return row >= 1 && col >= 1 && row <= static_cast<int>(parts_.size()) && col <= parts_[row - 1];
  }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// All partitions of n, in reverse lexicographic order ((n) first).
inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

inline int residue(int col, int row) { return col - row; }

/// v^{lambda,a}: weight a + r counts the boxes of residue r.
inline DimensionVector residue_dim_vector(const Partition& lambda, int a) {
  DimensionVector v;
  for (int row = 1; row <= static_cast<int>(lambda.parts().size()); ++row)
    for (int col = 1; col <= lambda.parts()[row - 1]; ++col) v.add(a + residue(col, row), 1);
  return v;
}

/// A module together with weight vectors that generate it.
struct GeneratorSet {
  EuclideanModule module;
  std::vector<std::pair<int, Vector>> generators;  // (weight, vector in V_weight)
};

/// Boxes of a given weight, ordered by row; this fixes the basis of each V_k.
inline std::map<int, std::vector<std::pair<int, int>>> boxes_by_weight(const Partition& lambda, int a) {
  std::map<int, std::vector<std::pair<int, int>>> out;
  for (int row = 1; row <= static_cast<int>(lambda.parts().size()); ++row)
    for (int col = 1; col <= lambda.parts()[row - 1]; ++col) out[a + residue(col, row)].emplace_back(col, row);
  return out;
}

/// The single-generator module on the boxes of lambda: p+ moves a box one
/// column right, p- one row down, both zero off the diagram; the generator is
/// the corner box x_{1,1} of weight a.
inline GeneratorSet young_module(const Partition& lambda, int a) {
  if (lambda.empty()) throw std::invalid_argument("young_module: empty partition");
  const auto boxes = boxes_by_weight(lambda, a);
  auto position = [&](int col, int row) -> std::optional<std::size_t> {
    if (!lambda.contains(col, row)) return std::nullopt;
    const auto& list = boxes.at(a + residue(col, row));
    return static_cast<std::size_t>(std::find(list.begin(), list.end(), std::make_pair(col, row)) - list.begin());
  };
  EuclideanModule m = zero_module(residue_dim_vector(lambda, a));
  for (auto& [k, mat] : m.p_plus) {
    const auto it = boxes.find(k);
    if (it == boxes.end()) continue;
    for (std::size_t j = 0; j < it->second.size(); ++j) {
      const auto [col, row] = it->second[j];
      if (auto target = position(col + 1, row)) mat(*target, j) = 1;
    }
  }
  for (auto& [k, mat] : m.p_minus) {
    const auto it = boxes.find(k);
    if (it == boxes.end()) continue;
    for (std::size_t j = 0; j < it->second.size(); ++j) {
      const auto [col, row] = it->second[j];
      if (auto target = position(col, row + 1)) mat(*target, j) = 1;
    }
  }
  const std::size_t corner = *position(1, 1);
  return {std::move(m), {{a, unit_vector(residue_dim_vector(lambda, a)[a], corner)}}};
}

/// (to_quiver(module), s) with one framing column per generator.
inline FramedPoint framed_point(const GeneratorSet& g) {
  QuiverRep x = to_quiver(g.module);
  DimensionVector w;
  std::map<int, std::vector<Vector>> cols;
  for (const auto& [k, v] : g.generators) {
    if (v.size() != x.dim(k)) throw std::invalid_argument("generator has wrong length");
    w.add(k, 1);
    cols[k].push_back(v);
  }
  std::map<int, Matrix> framing;
  for (const auto& [k, vs] : cols) framing.emplace(k, Matrix::from_columns(x.dim(k), vs));
  return make_framed_point(std::move(x), std::move(w), std::move(framing));
}

/// Sum over i of v_i w_i - v_i^2 + v_i v_{i+1}.
inline std::int64_t nakajima_dim(const DimensionVector& v, const DimensionVector& w) {
  std::int64_t d = 0;
  for (const auto& [i, vi] : v.entries()) {
    const auto n = static_cast<std::int64_t>(vi);
    d += n * static_cast<std::int64_t>(w[i]) - n * n + n * static_cast<std::int64_t>(v[i + 1]);
  }
  return d;
}

/// The unique partition with residue_dim_vector(lambda, a) == v, if any.
///
/// A Young diagram is determined by its diagonal lengths: the diagonal of
/// residue r >= 0 fills rows 1..c_r, the diagonal of residue r < 0 fills
/// columns 1..c_r. The candidate read off from the counts is accepted only if
/// it is a diagram whose residue counts reproduce v.
inline std::optional<Partition> single_generator_check(const DimensionVector& v, int a) {
  if (v.is_zero()) return Partition{};
  auto count = [&](int r) { return static_cast<int>(v[a + r]); };
  const int lo = v.min_weight() - a, hi = v.max_weight() - a;
  const int rows = std::max(0, -lo) + count(0) + 1;
  std::vector<int> parts;
  for (int row = 1; row <= rows + hi + 1; ++row) {
    int length = 0;
    for (int col = 1; col <= hi + row; ++col) {
      const int r = residue(col, row);
      const bool present = r >= 0 ? row <= count(r) : col <= count(r);
      if (!present) break;
      length = col;
    }
    if (length == 0) break;
    parts.push_back(length);
  }
  for (std::size_t i = 1; i < parts.size(); ++i)
    if (parts[i] > parts[i - 1]) return std::nullopt;
  Partition lambda(parts);
  if (!(residue_dim_vector(lambda, a) == v)) return std::nullopt;
  return lambda;
}

}  // namespace e2q
