#pragma once

#include <array>
#include <map>
#include <string>
#include <variant>

#include "teich/qseries/belement.hpp"

namespace teich::schottky {

using qseries::BElement;
using qseries::QSeries;
using qseries::RingPtr;

/// Point of P^1 over B: a ring element or infinity.
struct Infinity {
  friend bool operator==(Infinity, Infinity) { return true; }
};
using Point = std::variant<BElement, Infinity>;

bool is_infinity(const Point& p);
std::string to_string(const Point& p);

/// 2x2 matrix over B read modulo scalars.
class ProjMat {
 public:
  enum class Normalization {
    representative,  // product of generator matrices as displayed (det = prod q)
    pivot,           // first nonzero row-major entry scaled to 1
  };

  ProjMat(std::array<BElement, 4> entries, Normalization tag = Normalization::representative);
  static ProjMat identity(const RingPtr& ring);

  const BElement& operator()(int i, int j) const { return m_[2 * i + j]; }
  const std::array<BElement, 4>& entries() const noexcept { return m_; }
  Normalization normalization() const noexcept { return tag_; }
  const RingPtr& ring() const { return m_[0].ring(); }

  BElement det() const;
  BElement trace() const;
  /// [[d, -b], [-c, a]]; for an invertible M this is det(M) M^{-1}.
  ProjMat adjugate() const;
  ProjMat operator*(const ProjMat& other) const;
  ProjMat operator*(const BElement& scalar) const;

  /// Pivot form when the first nonzero entry is invertible; otherwise *this.
  ProjMat normalized() const;
  /// Equality in PGL_2 of the truncated ring.
  bool projectively_equal(const ProjMat& other) const;
  /// Off-diagonal zero and equal diagonal entries.
  bool is_scalar() const;

  ProjMat substitute(const std::map<std::string, Rational>& assignment) const;

  /// Entries as canonical strings, row-major.
  std::array<std::array<std::string, 2>, 2> to_strings() const;

  friend bool operator==(const ProjMat& a, const ProjMat& b) { return a.m_ == b.m_; }

 private:
  std::array<BElement, 4> m_;
  Normalization tag_;
};

/// (m11 z + m12) / (m21 z + m22) with the usual conventions at infinity.
/// Throws Error(not_invertible) when the denominator is nonzero but not a unit.
Point mobius_apply(const ProjMat& m, const Point& z);

}  // namespace teich::schottky
