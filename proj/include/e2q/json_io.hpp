#pragma once

#include "e2q/euclidean_module.hpp"
#include "e2q/framed.hpp"
#include "e2q/young.hpp"

#include <json.hpp>

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace e2q::io {

using json = nlohmann::json;

/// Thrown for documents that are well-formed JSON but not a valid encoding.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline json rational_to_json(const Rational& q) { return to_string(q); }

inline Rational rational_from_json(const json& j) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw FormatError(e.what());
    }
  }
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw FormatError("rational must be a string \"p/q\" or an integer, got " + j.dump());
}

inline json vector_to_json(const Vector& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(rational_to_json(q));
  return a;
}

inline Vector vector_from_json(const json& j) {
  if (!j.is_array()) throw FormatError("vector must be an array");
  Vector v;
  for (const auto& e : j) v.push_back(rational_from_json(e));
  return v;
}

/// Array of rows. A matrix with zero rows is [], which loses the column count;
/// readers supply the expected shape.
inline json matrix_to_json(const Matrix& m) {
  json a = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(vector_to_json(m.row(r)));
  return a;
}

inline Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array()) throw FormatError("matrix must be an array of rows");
  if (j.size() != rows) throw FormatError("matrix has " + std::to_string(j.size()) + " rows, expected " + std::to_string(rows));
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const Vector row = vector_from_json(j[r]);
    if (row.size() != cols)
      throw FormatError("matrix row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
  }
  return m;
}

/// Shape-free reading for standalone matrices.
inline Matrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw FormatError("matrix must be an array of rows");
  const std::size_t cols = j.empty() ? 0 : j[0].size();
  return matrix_from_json(j, j.size(), cols);
}

inline int weight_key(const std::string& s) {
  std::size_t used = 0;
  int k = 0;
  try {
    k = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw FormatError("weight key must be an integer, got '" + s + "'");
  return k;
}

inline json dims_to_json(const DimensionVector& v) {
  json o = json::object();
  for (const auto& [k, n] : v.entries()) o[std::to_string(k)] = n;
  return o;
}

inline DimensionVector dims_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("dimension vector must be an object {\"k\": n}");
  DimensionVector v;
  for (const auto& [key, n] : j.items()) {
    if (!n.is_number_integer() || n.get<long>() < 0) throw FormatError("dimension must be a non-negative integer");
    v.set(weight_key(key), n.get<std::size_t>());
  }
  return v;
}

inline json window_to_json(const Window& w) { return json::array({w.lo, w.hi}); }

inline Window window_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    throw FormatError("window must be [a, b]");
  try {
    return {j[0].get<int>(), j[1].get<int>()};
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

// -- QuiverRep ---------------------------------------------------------------

/// {"window":[a,b], "dims":{...}, "maps":{"h0":[[..]], "hbar0":[[..]]}}. Only
/// arrows whose endpoints both have positive dimension are written.
inline json rep_to_json(const QuiverRep& x) {
  json maps = json::object();
  for (const auto& [a, m] : x.maps())
    if (m.rows() > 0 && m.cols() > 0) maps[a.name()] = matrix_to_json(m);
  return {{"window", window_to_json(x.window())}, {"dims", dims_to_json(x.dims())}, {"maps", maps}};
}

inline QuiverRep rep_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("representation must be a JSON object");
  const DimensionVector dims = j.contains("dims") ? dims_from_json(j.at("dims")) : DimensionVector{};
  Window w;
  if (j.contains("window"))
    w = window_from_json(j.at("window"));
  else if (!dims.is_zero())
    w = window_of_support(dims);
  for (int k : dims.support())
    if (!w.contains(k)) throw FormatError("dims has weight " + std::to_string(k) + " outside the window");
  QuiverRep x(w, dims);
  if (j.contains("maps")) {
    if (!j.at("maps").is_object()) throw FormatError("maps must be an object");
    for (const auto& [name, m] : j.at("maps").items()) {
      Arrow a;
      try {
        a = parse_arrow(name);
      } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
      }
      if (!w.contains(a.tail()) || !w.contains(a.head())) throw FormatError("arrow " + name + " outside the window");
      x.set_map(a, matrix_from_json(m, x.dim(a.head()), x.dim(a.tail())));
    }
  }
  return x;
}

// -- EuclideanModule ---------------------------------------------------------

/// {"dims":{...}, "p_plus":{"k":[[..]]}, "p_minus":{"k":[[..]]}}, keys the
/// source weight. Only maps between nonzero spaces are written.
inline json module_to_json(const EuclideanModule& m) {
  json plus = json::object(), minus = json::object();
  for (const auto& [k, a] : m.p_plus)
    if (a.rows() > 0 && a.cols() > 0) plus[std::to_string(k)] = matrix_to_json(a);
  for (const auto& [k, a] : m.p_minus)
    if (a.rows() > 0 && a.cols() > 0) minus[std::to_string(k)] = matrix_to_json(a);
  return {{"dims", dims_to_json(m.dims)}, {"p_plus", plus}, {"p_minus", minus}};
}

/// Reads into canonical form: absent maps are zero.
inline EuclideanModule module_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("module must be a JSON object");
  EuclideanModule m = zero_module(j.contains("dims") ? dims_from_json(j.at("dims")) : DimensionVector{});
  for (auto [field, step] : {std::pair{"p_plus", 1}, std::pair{"p_minus", -1}}) {
    if (!j.contains(field)) continue;
    if (!j.at(field).is_object()) throw FormatError(std::string(field) + " must be an object");
    auto& target = step == 1 ? m.p_plus : m.p_minus;
    for (const auto& [key, a] : j.at(field).items()) {
      const int k = weight_key(key);
      const std::size_t rows = m.dims[k + step], cols = m.dims[k];
      if (target.count(k))
        target[k] = matrix_from_json(a, rows, cols);
      else
        target[k] = matrix_from_json(a);  // out of support; validate reports it
    }
  }
  return m;
}

// -- FramedPoint -------------------------------------------------------------

inline json framed_to_json(const FramedPoint& p) {
  json j = rep_to_json(p.rep);
  j["framing_dims"] = dims_to_json(p.framing_dims);
  json f = json::object();
  for (const auto& [k, m] : p.framing)
    if (m.rows() > 0 && m.cols() > 0) f[std::to_string(k)] = matrix_to_json(m);
  j["framing"] = f;
  return j;
}

inline FramedPoint framed_from_json(const json& j) {
  QuiverRep x = rep_from_json(j);
  const DimensionVector w = j.contains("framing_dims") ? dims_from_json(j.at("framing_dims")) : DimensionVector{};
  std::map<int, Matrix> framing;
  if (j.contains("framing")) {
    if (!j.at("framing").is_object()) throw FormatError("framing must be an object");
    for (const auto& [key, m] : j.at("framing").items()) {
      const int k = weight_key(key);
      framing.emplace(k, matrix_from_json(m, x.dim(k), w[k]));
    }
  }
  return make_framed_point(std::move(x), w, std::move(framing));
}

// -- misc --------------------------------------------------------------------

inline json partition_to_json(const Partition& p) { return p.parts(); }

inline Partition partition_from_json(const json& j) {
  if (!j.is_array()) throw FormatError("partition must be an array of integers");
  std::vector<int> parts;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw FormatError("partition must be an array of integers");
    parts.push_back(e.get<int>());
  }
  try {
    return Partition(parts);
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

inline json graded_map_to_json(const GradedMap& g) {
  json o = json::object();
  for (const auto& [k, m] : g)
    if (m.rows() > 0 && m.cols() > 0) o[std::to_string(k)] = matrix_to_json(m);
  return o;
}

inline json graded_vector_to_json(const GradedVector& v) {
  json o = json::object();
  for (const auto& [k, x] : v) o[std::to_string(k)] = vector_to_json(x);
  return o;
}

inline GradedVector graded_vector_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("graded vector must be an object {\"k\": [..]}");
  GradedVector v;
  for (const auto& [key, x] : j.items()) v[weight_key(key)] = vector_from_json(x);
  return v;
}

inline json word_to_json(const AlgebraWord& w) {
  json a = json::array();
  for (const auto& l : w) a.push_back(to_string(l));
  return a;
}

inline AlgebraWord word_from_json(const json& j) {
  if (!j.is_array()) throw FormatError("word must be an array of letters");
  AlgebraWord w;
  for (const auto& e : j) {
    if (!e.is_string()) throw FormatError("letters are strings: \"P+\", \"P-\", \"L\", \"Proj:k\"");
    try {
      w.push_back(parse_letter(e.get<std::string>()));
    } catch (const std::invalid_argument& ex) {
      throw FormatError(ex.what());
    }
  }
  return w;
}

inline std::set<int> weight_set_from_json(const json& j) {
  if (!j.is_array()) throw FormatError("weight set must be an array of integers");
  std::set<int> s;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw FormatError("weight set must be an array of integers");
    s.insert(e.get<int>());
  }
  return s;
}

}  // namespace e2q::io
