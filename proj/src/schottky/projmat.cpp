#include "teich/schottky/projmat.hpp"

#include "teich/error.hpp"

namespace teich::schottky {

using qseries::Invertibility;

bool is_infinity(const Point& p) { return std::holds_alternative<Infinity>(p); }

std::string to_string(const Point& p) {
  if (is_infinity(p)) return "inf";
  return std::get<BElement>(p).to_string();
}

ProjMat::ProjMat(std::array<BElement, 4> entries, Normalization tag)
    : m_(std::move(entries)), tag_(tag) {}

ProjMat ProjMat::identity(const RingPtr& ring) {
  auto one = BElement::constant(ring, 1), zero = BElement::constant(ring, 0);
  return ProjMat({one, zero, zero, one});
}

BElement ProjMat::det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }

BElement ProjMat::trace() const { return m_[0] + m_[3]; }

ProjMat ProjMat::adjugate() const { return ProjMat({m_[3], -m_[1], -m_[2], m_[0]}); }

ProjMat ProjMat::operator*(const ProjMat& o) const {
  return ProjMat({m_[0] * o.m_[0] + m_[1] * o.m_[2], m_[0] * o.m_[1] + m_[1] * o.m_[3],
                  m_[2] * o.m_[0] + m_[3] * o.m_[2], m_[2] * o.m_[1] + m_[3] * o.m_[3]});
}

ProjMat ProjMat::operator*(const BElement& s) const {
  return ProjMat({m_[0] * s, m_[1] * s, m_[2] * s, m_[3] * s}, tag_);
}

ProjMat ProjMat::normalized() const {
  for (const auto& x : m_) {
    if (x.is_zero()) continue;
    if (x.classify() != Invertibility::unit) return *this;
    ProjMat r = *this * x.inverse();
    r.tag_ = Normalization::pivot;
    return r;
  }
  return *this;
}

bool ProjMat::projectively_equal(const ProjMat& other) const {
  const ProjMat a = normalized(), b = other.normalized();
  if (a.tag_ == Normalization::pivot && b.tag_ == Normalization::pivot) return a.m_ == b.m_;
  // No unit pivot: compare all 2x2 minors of the pair of entry vectors.
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (!(m_[i] * other.m_[j] == m_[j] * other.m_[i])) return false;
    }
  }
  return true;
}

bool ProjMat::is_scalar() const { return m_[1].is_zero() && m_[2].is_zero() && m_[0] == m_[3]; }

ProjMat ProjMat::substitute(const std::map<std::string, Rational>& assignment) const {
  return ProjMat({m_[0].substitute(assignment), m_[1].substitute(assignment),
                  m_[2].substitute(assignment), m_[3].substitute(assignment)},
                 tag_);
}

std::array<std::array<std::string, 2>, 2> ProjMat::to_strings() const {
  return {{{m_[0].to_string(), m_[1].to_string()}, {m_[2].to_string(), m_[3].to_string()}}};
}

Point mobius_apply(const ProjMat& m, const Point& z) {
  BElement num = m(0, 0), den = m(1, 0);
  if (!is_infinity(z)) {
    const auto& x = std::get<BElement>(z);
    num = m(0, 0) * x + m(0, 1);
    den = m(1, 0) * x + m(1, 1);
  }
  if (den.is_zero()) return Infinity{};
  if (den.classify() != Invertibility::unit) {
    throw Error(ErrorKind::not_invertible,
                "denominator " + den.to_string() + " of the image is not invertible");
  }
  return num * den.inverse();
}

}  // namespace teich::schottky
