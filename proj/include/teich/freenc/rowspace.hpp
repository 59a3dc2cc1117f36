#pragma once

#include <map>
#include <utility>

#include "teich/qseries/rational.hpp"

namespace teich::freenc {

/// Exact incremental row echelon form over Q for sparse vectors indexed by an
/// ordered key. Each stored row has leading key with coefficient 1.
template <class Key, class Less = std::less<Key>>
class RowSpace {
 public:
  using Vector = std::map<Key, Rational, Less>;

  /// Reduces v against the stored rows; returns the remainder.
  Vector reduce(Vector v) const {
    Vector out;
    while (!v.empty()) {
      auto lead = v.begin();
      auto row = rows_.find(lead->first);
      if (row == rows_.end()) {
        out.insert(*lead);
        v.erase(lead);
        continue;
      }
      const Rational factor = lead->second;
      for (const auto& [k, c] : row->second) {
        auto& slot = v[k];
        slot -= factor * c;
        if (sgn(slot) == 0) v.erase(k);
      }
    }
    return out;
  }

  /// Adds v to the span; true iff it was independent.
  bool insert(const Vector& v) {
    Vector r = reduce(v);
    if (r.empty()) return false;
    const Rational lead = r.begin()->second;
    for (auto& [k, c] : r) c /= lead;
    const Key key = r.begin()->first;
    rows_.emplace(key, std::move(r));
    return true;
  }

  bool contains(const Vector& v) const { return reduce(v).empty(); }
  std::size_t rank() const noexcept { return rows_.size(); }

 private:
  std::map<Key, Vector, Less> rows_;
};

}  // namespace teich::freenc
