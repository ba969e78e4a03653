#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

namespace e2q {

/// Finitely supported map from integer weights to multiplicities. Only
/// positive entries are stored, so equality is structural.
class DimensionVector {
 public:
  DimensionVector() = default;
  DimensionVector(std::initializer_list<std::pair<const int, std::size_t>> init) {
    for (const auto& [k, n] : init) set(k, n);
  }

  /// e^k scaled by n.
  static DimensionVector unit(int k, std::size_t n = 1) {
    DimensionVector v;
    v.set(k, n);
    return v;
  }

  std::size_t operator[](int k) const {
    auto it = entries_.find(k);
    return it == entries_.end() ? 0 : it->second;
  }

  void set(int k, std::size_t n) {
    if (n == 0)
      entries_.erase(k);
    else
      entries_[k] = n;
  }
  void add(int k, std::size_t n) { set(k, (*this)[k] + n); }

  bool is_zero() const { return entries_.empty(); }
  std::size_t total() const {
    std::size_t t = 0;
    for (const auto& [k, n] : entries_) t += n;
    return t;
  }
  int min_weight() const { return require_nonzero().begin()->first; }
  int max_weight() const { return require_nonzero().rbegin()->first; }

  std::vector<int> support() const {
    std::vector<int> s;
    for (const auto& [k, n] : entries_) s.push_back(k);
    return s;
  }

  const std::map<int, std::size_t>& entries() const { return entries_; }

  DimensionVector shifted(int n) const {
    DimensionVector v;
    for (const auto& [k, m] : entries_) v.entries_[k + n] = m;
    return v;
  }

  friend DimensionVector operator+(DimensionVector a, const DimensionVector& b) {
    for (const auto& [k, n] : b.entries_) a.add(k, n);
    return a;
  }
  friend bool operator==(const DimensionVector&, const DimensionVector&) = default;

 private:
  const std::map<int, std::size_t>& require_nonzero() const {
    if (entries_.empty()) throw std::invalid_argument("dimension vector has empty support");
    return entries_;
  }
  std::map<int, std::size_t> entries_;
};

}  // namespace e2q
