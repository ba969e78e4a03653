#pragma once

#include "e2q/matrix.hpp"
#include "e2q/quiver_rep.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace e2q {

/// A finite-dimensional e(2)-module with weight decomposition V = sum V_k.
///
/// l acts on V_k by k, so [l, p+-] = +-p+- holds structurally. p_plus[k] is
/// p+ : V_k -> V_{k+1}, p_minus[k] is p- : V_k -> V_{k-1}. In canonical form
/// (what every constructor here produces) p_plus has a key for every k in
/// [lo, hi-1] and p_minus for every k in [lo+1, hi], lo..hi the support window.
struct EuclideanModule {
  DimensionVector dims;
  std::map<int, Matrix> p_plus;
  std::map<int, Matrix> p_minus;

  friend bool operator==(const EuclideanModule&, const EuclideanModule&) = default;

  Matrix plus(int k) const {
    auto it = p_plus.find(k);
    return it == p_plus.end() ? Matrix(dims[k + 1], dims[k]) : it->second;
  }
  Matrix minus(int k) const {
    auto it = p_minus.find(k);
    return it == p_minus.end() ? Matrix(dims[k - 1], dims[k]) : it->second;
  }
};

/// Canonical module with the given weight dimensions and p+- = 0.
inline EuclideanModule zero_module(const DimensionVector& dims) {
  EuclideanModule m{dims, {}, {}};
  if (dims.is_zero()) return m;
  for (int k = dims.min_weight(); k < dims.max_weight(); ++k) {
    m.p_plus.emplace(k, Matrix(dims[k + 1], dims[k]));
    m.p_minus.emplace(k + 1, Matrix(dims[k], dims[k + 1]));
  }
  return m;
}

struct ModuleViolation {
  int weight = 0;
  std::string kind;  // "shape", "support", "commutator"
  std::string detail;
  friend bool operator==(const ModuleViolation&, const ModuleViolation&) = default;
};

/// Empty iff every stored map has the right shape, no map leaves the support
/// closure, and p- p+ = p+ p- on every V_k.
inline std::vector<ModuleViolation> validate(const EuclideanModule& m) {
  std::vector<ModuleViolation> out;
  bool shapes_ok = true;
  auto check = [&](const std::map<int, Matrix>& maps, int step, const char* name) {
    for (const auto& [k, a] : maps) {
      if (a.rows() != m.dims[k + step] || a.cols() != m.dims[k]) {
        shapes_ok = false;
        out.push_back({k, "shape",
                       std::string(name) + " at weight " + std::to_string(k) + " has shape " + a.shape() +
                           ", expected " + std::to_string(m.dims[k + step]) + "x" + std::to_string(m.dims[k])});
      } else if (!a.is_zero() && (m.dims.is_zero() || k < m.dims.min_weight() || k > m.dims.max_weight())) {
        out.push_back({k, "support", std::string(name) + " nonzero outside the support"});
      }
    }
  };
  check(m.p_plus, 1, "p+");
  check(m.p_minus, -1, "p-");
  if (!shapes_ok || m.dims.is_zero()) return out;
  for (int k = m.dims.min_weight(); k <= m.dims.max_weight(); ++k) {
    if (m.dims[k] == 0) continue;
    const Matrix up_down = m.minus(k + 1) * m.plus(k);
    const Matrix down_up = m.plus(k - 1) * m.minus(k);
    if (!(up_down == down_up)) out.push_back({k, "commutator", "p- p+ != p+ p- on V_" + std::to_string(k)});
  }
  return out;
}

/// x_{h_i} = p+ on V_i, x_{hbar_i} = p- on V_{i+1}, over the support window.
inline QuiverRep to_quiver(const EuclideanModule& m) {
  if (const auto v = validate(m); !v.empty())
    throw std::invalid_argument("to_quiver: invalid module (" + v.front().detail + ")");
  if (m.dims.is_zero()) return QuiverRep{};
  const Window w = window_of_support(m.dims);
  QuiverRep x(w, m.dims);
  for (int i = w.lo; i < w.hi; ++i) {
    x.set_map(Arrow::h(i), m.plus(i));
    x.set_map(Arrow::hbar(i), m.minus(i + 1));
  }
  return x;
}

inline EuclideanModule from_quiver(const QuiverRep& x) {
  if (const auto bad = check_relations(x); !bad.empty())
    throw std::invalid_argument("from_quiver: relation violated at vertex " + std::to_string(bad.front()));
  EuclideanModule m = zero_module(x.dims());
  for (auto& [k, a] : m.p_plus) a = x.map(Arrow::h(k));
  for (auto& [k, a] : m.p_minus) a = x.map(Arrow::hbar(k - 1));
  return m;
}

/// Tensor with the character chi_n: weight k becomes k + n.
inline EuclideanModule char_shift(const EuclideanModule& m, int n) {
  EuclideanModule s{m.dims.shifted(n), {}, {}};
  for (const auto& [k, a] : m.p_plus) s.p_plus.emplace(k + n, a);
  for (const auto& [k, a] : m.p_minus) s.p_minus.emplace(k + n, a);
  return s;
}

/// Intertwiners of e(2)-modules: grading-preserving g with g p+ = p+' g and
/// g p- = p-' g, solved directly on the module side.
inline std::vector<std::map<int, Matrix>> module_hom_basis(const EuclideanModule& m, const EuclideanModule& n) {
  std::set<int> weights;
  for (int k : m.dims.support())
    if (n.dims[k] > 0) weights.insert(k);
  std::map<int, std::size_t> off;
  std::size_t unknowns = 0;
  for (int k : weights) {
    off[k] = unknowns;
    unknowns += n.dims[k] * m.dims[k];
  }
  auto index = [&](int k, std::size_t r, std::size_t c) -> std::optional<std::size_t> {
    if (!weights.count(k)) return std::nullopt;
    return off[k] + r * m.dims[k] + c;
  };
  std::vector<Vector> rows;
  // g_{k+s} P_k = P'_k g_k for P in {p+ (s=1), p- (s=-1)}
  for (int s : {1, -1}) {
    std::set<int> sources;
    for (int k : m.dims.support()) sources.insert(k);
    for (int k : n.dims.support()) sources.insert(k);
    for (int k : sources) {
      const int t = k + s;
      const Matrix a = s == 1 ? m.plus(k) : m.minus(k);
      const Matrix b = s == 1 ? n.plus(k) : n.minus(k);
      for (std::size_t r = 0; r < n.dims[t]; ++r)
        for (std::size_t c = 0; c < m.dims[k]; ++c) {
          Vector row(unknowns);
          for (std::size_t j = 0; j < m.dims[t]; ++j)
            if (auto idx = index(t, r, j)) row[*idx] += a(j, c);
          for (std::size_t j = 0; j < n.dims[k]; ++j)
            if (auto idx = index(k, j, c)) row[*idx] -= b(r, j);
          if (!is_zero(row)) rows.push_back(std::move(row));
        }
    }
  }
  std::vector<std::map<int, Matrix>> basis;
  for (const Vector& v : kernel_basis(Matrix::from_rows(unknowns, rows))) {
    std::map<int, Matrix> g;
    for (int k : weights) {
      Matrix gk(n.dims[k], m.dims[k]);
      for (std::size_t r = 0; r < gk.rows(); ++r)
        for (std::size_t c = 0; c < gk.cols(); ++c) gk(r, c) = v[off[k] + r * m.dims[k] + c];
      g.emplace(k, std::move(gk));
    }
    basis.push_back(std::move(g));
  }
  return basis;
}

// ---------------------------------------------------------------------------
// Words in the modified enveloping algebra

enum class LetterKind { p_plus, p_minus, l, proj };

struct Letter {
  LetterKind kind = LetterKind::l;
  int weight = 0;  // only for proj
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Letters apply right to left: the last letter acts first.
using AlgebraWord = std::vector<Letter>;

inline Letter parse_letter(const std::string& s) {
  if (s == "P+") return {LetterKind::p_plus, 0};
  if (s == "P-") return {LetterKind::p_minus, 0};
  if (s == "L") return {LetterKind::l, 0};
  if (s.rfind("Proj:", 0) == 0) {
    std::size_t used = 0;
    int k = 0;
    try {
      k = std::stoi(s.substr(5), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size() - 5) throw std::invalid_argument("bad letter '" + s + "'");
    return {LetterKind::proj, k};
  }
  throw std::invalid_argument("bad letter '" + s + "'");
}

inline std::string to_string(const Letter& l) {
  switch (l.kind) {
    case LetterKind::p_plus: return "P+";
    case LetterKind::p_minus: return "P-";
    case LetterKind::l: return "L";
    case LetterKind::proj: return "Proj:" + std::to_string(l.weight);
  }
  return "?";
}

/// weight -> coordinates in V_k; absent weights are zero.
using GradedVector = std::map<int, Vector>;

inline GradedVector normalized(GradedVector v) {
  for (auto it = v.begin(); it != v.end();) it = is_zero(it->second) ? v.erase(it) : std::next(it);
  return v;
}

inline GradedVector apply_letter(const EuclideanModule& m, const Letter& letter, const GradedVector& v) {
  GradedVector out;
  for (const auto& [k, x] : v) {
    if (x.size() != m.dims[k])
      throw std::invalid_argument("vector component at weight " + std::to_string(k) + " has wrong length");
    switch (letter.kind) {
      case LetterKind::p_plus: {
        Vector y = m.plus(k) * x;
        if (!y.empty()) {
          auto& slot = out.try_emplace(k + 1, Vector(y.size())).first->second;
          for (std::size_t i = 0; i < y.size(); ++i) slot[i] += y[i];
        }
        break;
      }
      case LetterKind::p_minus: {
        Vector y = m.minus(k) * x;
        if (!y.empty()) {
          auto& slot = out.try_emplace(k - 1, Vector(y.size())).first->second;
          for (std::size_t i = 0; i < y.size(); ++i) slot[i] += y[i];
        }
        break;
      }
      case LetterKind::l: {
        Vector y = x;
        for (auto& c : y) c *= k;
        out.emplace(k, std::move(y));
        break;
      }
      case LetterKind::proj:
        if (k == letter.weight) out.emplace(k, x);
        break;
    }
  }
  return normalized(std::move(out));
}

inline GradedVector apply_word(const EuclideanModule& m, const AlgebraWord& w, GradedVector v) {
  v = normalized(std::move(v));
  for (auto it = w.rbegin(); it != w.rend(); ++it) v = apply_letter(m, *it, v);
  return v;
}

/// Basis vector j of V_k.
inline GradedVector weight_basis_vector(const EuclideanModule& m, int k, std::size_t j) {
  return {{k, unit_vector(m.dims[k], j)}};
}

// ---------------------------------------------------------------------------

struct WeightRuns {
  std::vector<std::pair<int, int>> runs;  // inclusive [first, last]
  /// No run of five or more consecutive weights.
  bool finite_type_guaranteed = true;
};

inline WeightRuns weight_runs(const std::set<int>& weights) {
  WeightRuns r;
  for (int k : weights) {
    if (!r.runs.empty() && r.runs.back().second + 1 == k)
      r.runs.back().second = k;
    else
      r.runs.emplace_back(k, k);
  }
  for (const auto& [a, b] : r.runs)
    if (b - a + 1 > 4) r.finite_type_guaranteed = false;
  return r;
}

}  // namespace e2q
