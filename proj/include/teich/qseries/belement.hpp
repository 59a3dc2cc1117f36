#pragma once

#include <map>
#include <string>

#include "teich/qseries/qseries.hpp"

namespace teich::qseries {

/// Why an element failed to invert.
enum class Invertibility {
  unit,            // nonzero constant term after removing the monomial factor
  zero,            // the element is zero
  no_unit_factor,  // e.g. q1 + q2: not a monomial times a unit
};

/// Element of A[prod q_e^{-1}] at finite truncation: numerator / q^denominator.
/// Kept reduced: the numerator is not divisible by q_e whenever denominator_e > 0.
class BElement {
 public:
  explicit BElement(QSeries numerator);
  BElement(QSeries numerator, Exponent denominator);

  static BElement constant(RingPtr ring, const Rational& c);

  const QSeries& numerator() const noexcept { return num_; }
  const Exponent& denominator() const noexcept { return den_; }
  const RingPtr& ring() const noexcept { return num_.ring(); }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_series() const;
  /// The series itself when the denominator is trivial.
  std::optional<QSeries> as_series() const;

  Invertibility classify() const;
  /// Exact through the truncation order only: a monomial factor of degree d
  /// costs d orders of precision in later products.
  BElement inverse() const;

  BElement operator-() const;
  friend BElement operator+(const BElement& a, const BElement& b);
  friend BElement operator-(const BElement& a, const BElement& b);
  friend BElement operator*(const BElement& a, const BElement& b);
  friend BElement operator*(const BElement& a, const Rational& c);

  /// Throws Error(pole) when a variable with positive denominator exponent is set to 0.
  BElement substitute(const std::map<std::string, Rational>& assignment) const;

  std::string to_string() const;

  friend bool operator==(const BElement& a, const BElement& b);

 private:
  void reduce();

  QSeries num_;
  Exponent den_;
};

/// Inverse of a monomial times a unit, possibly carrying a denominator.
BElement invert(const QSeries& x);

}  // namespace teich::qseries
