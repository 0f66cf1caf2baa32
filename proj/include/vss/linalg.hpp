#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "vss/scalar.hpp"

namespace vss {

// A row space over the rationals kept in reduced row echelon form. Vectors
// are sparse maps Key -> Scalar ordered by Compare; a row's pivot is its
// smallest key, normalized to 1, and no other row has an entry there.
// The reduced form is unique for a given span.
template <class Key, class Compare = std::less<Key>>
class SparseEchelon {
 public:
  using Vector = std::map<Key, Scalar, Compare>;

  // Reduces v against the current rows; the result has no pivot entries.
  Vector reduce(Vector v) const {
    for (const Vector& row : rows_) {
      const Key& pivot = row.begin()->first;
      const auto it = v.find(pivot);
      if (it == v.end()) continue;
      const Scalar factor = it->second;
      for (const auto& [k, c] : row) axpy(v, k, -(factor * c));
    }
    return v;
  }

  bool contains(const Vector& v) const { return reduce(v).empty(); }

  // Adds v to the span. Returns false when v was already in it.
  bool insert(const Vector& v) {
    Vector r = reduce(v);
    if (r.empty()) return false;
    const Scalar lead = r.begin()->second.inverse();
    for (auto& [k, c] : r) c *= lead;
    const Key pivot = r.begin()->first;
    for (Vector& row : rows_) {
      const auto it = row.find(pivot);
      if (it == row.end()) continue;
      const Scalar factor = it->second;
      for (const auto& [k, c] : r) axpy(row, k, -(factor * c));
    }
    const Compare less;
    const auto pos = std::lower_bound(
        rows_.begin(), rows_.end(), pivot,
        [&](const Vector& row, const Key& key) { return less(row.begin()->first, key); });
    rows_.insert(pos, std::move(r));
    return true;
  }

  std::size_t rank() const { return rows_.size(); }
  // Rows sorted by pivot.
  const std::vector<Vector>& rows() const { return rows_; }

 private:
  static void axpy(Vector& v, const Key& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = v.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) v.erase(it);
    }
  }

  std::vector<Vector> rows_;
};

}  // namespace vss
