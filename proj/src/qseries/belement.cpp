#include "teich/qseries/belement.hpp"

#include <algorithm>
#include <sstream>

#include "teich/error.hpp"

namespace teich::qseries {

BElement::BElement(QSeries numerator)
    : num_(std::move(numerator)), den_(num_.ring()->size(), 0) {}

BElement::BElement(QSeries numerator, Exponent denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.size() != num_.ring()->size()) {
    throw Error(ErrorKind::precondition, "denominator exponent length does not match ring");
  }
  for (int d : den_) {
    if (d < 0) throw Error(ErrorKind::precondition, "negative denominator exponent");
  }
  reduce();
}

BElement BElement::constant(RingPtr ring, const Rational& c) {
  return BElement(QSeries::constant(std::move(ring), c));
}

void BElement::reduce() {
  if (num_.is_zero()) {
    std::fill(den_.begin(), den_.end(), 0);
    return;
  }
  Exponent g = *num_.monomial_gcd();
  bool any = false;
  for (std::size_t i = 0; i < g.size(); ++i) {
    g[i] = std::min(g[i], den_[i]);
    any = any || g[i] > 0;
  }
  if (!any) return;
  num_ = num_.divided_by_monomial(g);
  for (std::size_t i = 0; i < g.size(); ++i) den_[i] -= g[i];
}

bool BElement::is_series() const {
  return std::all_of(den_.begin(), den_.end(), [](int d) { return d == 0; });
}

std::optional<QSeries> BElement::as_series() const {
  if (!is_series()) return std::nullopt;
  return num_;
}

Invertibility BElement::classify() const {
  if (num_.is_zero()) return Invertibility::zero;
  Exponent g = *num_.monomial_gcd();
  QSeries unit = num_.divided_by_monomial(g);
  return sgn(unit.constant_term()) != 0 ? Invertibility::unit : Invertibility::no_unit_factor;
}

BElement BElement::inverse() const {
  switch (classify()) {
    case Invertibility::zero:
      throw Error(ErrorKind::not_invertible, "zero is not invertible");
    case Invertibility::no_unit_factor:
      throw Error(ErrorKind::not_invertible,
                  "not a monomial times a unit: " + num_.to_string());
    case Invertibility::unit:
      break;
  }
  // (m u / q^d)^{-1} = q^d u^{-1} / m
  Exponent m = *num_.monomial_gcd();
  QSeries unit_inv = num_.divided_by_monomial(m).inverse();
  return BElement(unit_inv.shifted(den_), m);
}

BElement BElement::operator-() const {
  BElement r(*this);
  r.num_ = -r.num_;
  return r;
}

BElement operator+(const BElement& a, const BElement& b) {
  const std::size_t n = a.den_.size();
  Exponent common(n), sa(n), sb(n);
  for (std::size_t i = 0; i < n; ++i) {
    common[i] = std::max(a.den_[i], b.den_[i]);
    sa[i] = common[i] - a.den_[i];
    sb[i] = common[i] - b.den_[i];
  }
  return BElement(a.num_.shifted(sa) + b.num_.shifted(sb), common);
}

BElement operator-(const BElement& a, const BElement& b) { return a + (-b); }

BElement operator*(const BElement& a, const BElement& b) {
  Exponent d(a.den_.size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = a.den_[i] + b.den_[i];
  return BElement(a.num_ * b.num_, d);
}

BElement operator*(const BElement& a, const Rational& c) {
  return BElement(a.num_ * c, a.den_);
}

BElement BElement::substitute(const std::map<std::string, Rational>& assignment) const {
  const auto& vars = num_.ring()->variables();
  Rational scale = 1;
  Exponent kept_den;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    auto it = assignment.find(vars[i]);
    if (it == assignment.end()) {
      kept_den.push_back(den_[i]);
      continue;
    }
    if (den_[i] > 0) {
      if (sgn(it->second) == 0) {
        throw Error(ErrorKind::pole, "pole of order " + std::to_string(den_[i]) + " at " +
                                         vars[i] + " = 0");
      }
      for (int p = 0; p < den_[i]; ++p) scale /= it->second;
    }
  }
  return BElement(num_.substitute(assignment) * scale, kept_den);
}

std::string BElement::to_string() const {
  if (is_series()) return num_.to_string();
  std::ostringstream out;
  out << '(' << num_.to_string() << ")/(";
  bool first = true;
  const auto& vars = num_.ring()->variables();
  for (std::size_t i = 0; i < den_.size(); ++i) {
    if (den_[i] == 0) continue;
    if (!first) out << '*';
    first = false;
    out << vars[i];
    if (den_[i] > 1) out << '^' << den_[i];
  }
  out << ')';
  return out.str();
}

bool operator==(const BElement& a, const BElement& b) {
  return a.den_ == b.den_ && a.num_ == b.num_;
}

BElement invert(const QSeries& x) { return BElement(x).inverse(); }

}  // namespace teich::qseries
