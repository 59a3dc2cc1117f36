#include "teich/qseries/qseries.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "teich/error.hpp"

namespace teich::qseries {

Ring::Ring(std::vector<std::string> variables, int order)
    : variables_(std::move(variables)), order_(order) {
  if (order_ < 0) throw Error(ErrorKind::precondition, "truncation order must be nonnegative");
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  auto it = std::lower_bound(variables_.begin(), variables_.end(), name);
  if (it == variables_.end() || *it != name) return std::nullopt;
  return static_cast<std::size_t>(it - variables_.begin());
}

RingPtr make_ring(std::vector<std::string> variables, int order) {
  std::sort(variables.begin(), variables.end());
  variables.erase(std::unique(variables.begin(), variables.end()), variables.end());
  return std::make_shared<const Ring>(std::move(variables), order);
}

int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool MonomialLess::operator()(const Exponent& a, const Exponent& b) const {
  const int da = total_degree(a);
  const int db = total_degree(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

QSeries::QSeries(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw Error(ErrorKind::precondition, "QSeries needs a ring");
}

QSeries QSeries::constant(RingPtr ring, const Rational& c) {
  QSeries s(std::move(ring));
  s.add_term(Exponent(s.ring_->size(), 0), c);
  return s;
}

QSeries QSeries::variable(RingPtr ring, std::string_view name) {
  auto idx = ring->index_of(name);
  if (!idx) throw Error(ErrorKind::precondition, "unknown variable '" + std::string(name) + "'");
  Exponent e(ring->size(), 0);
  e[*idx] = 1;
  return monomial(std::move(ring), std::move(e));
}

QSeries QSeries::monomial(RingPtr ring, Exponent exponent, const Rational& c) {
  if (exponent.size() != ring->size()) {
    throw Error(ErrorKind::precondition, "exponent length does not match ring");
  }
  QSeries s(std::move(ring));
  s.add_term(exponent, c);
  return s;
}

void QSeries::add_term(const Exponent& e, const Rational& c) {
  if (sgn(c) == 0 || total_degree(e) > ring_->order()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void QSeries::check_compatible(const QSeries& other) const {
  if (ring_ != other.ring_ && !(*ring_ == *other.ring_)) {
    throw Error(ErrorKind::precondition,
                "series from different rings (variables or truncation order differ)");
  }
}

Rational QSeries::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational QSeries::constant_term() const { return coefficient(Exponent(ring_->size(), 0)); }

bool QSeries::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

std::optional<int> QSeries::valuation() const {
  if (terms_.empty()) return std::nullopt;
  return total_degree(terms_.begin()->first);
}

std::optional<Exponent> QSeries::monomial_gcd() const {
  if (terms_.empty()) return std::nullopt;
  Exponent g = terms_.begin()->first;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = std::min(g[i], e[i]);
  }
  return g;
}

QSeries QSeries::operator-() const {
  QSeries r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

QSeries& QSeries::operator+=(const QSeries& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  a.check_compatible(b);
  QSeries r(a.ring_);
  const int order = a.ring_->order();
  const std::size_t n = a.ring_->size();
  Exponent e(n);
  Rational c;
  for (const auto& [ea, ca] : a.terms_) {
    const int da = total_degree(ea);
    for (const auto& [eb, cb] : b.terms_) {
      // terms are stored by ascending total degree
      if (da + total_degree(eb) > order) break;
      for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
      c = ca * cb;
      r.add_term(e, c);
    }
  }
  return r;
}

QSeries& QSeries::operator*=(const QSeries& other) { return *this = *this * other; }

QSeries& QSeries::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

QSeries QSeries::shifted(const Exponent& shift) const {
  QSeries r(ring_);
  Exponent e;
  for (const auto& [ex, c] : terms_) {
    e = ex;
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += shift[i];
    r.add_term(e, c);
  }
  return r;
}

QSeries QSeries::divided_by_monomial(const Exponent& m) const {
  QSeries r(ring_);
  Exponent e;
  for (const auto& [ex, c] : terms_) {
    e = ex;
    for (std::size_t i = 0; i < e.size(); ++i) {
      e[i] -= m[i];
      if (e[i] < 0) throw Error(ErrorKind::precondition, "monomial does not divide series");
    }
    r.terms_.emplace(e, c);
  }
  return r;
}

QSeries QSeries::inverse() const {
  const Rational c0 = constant_term();
  if (sgn(c0) == 0) {
    throw Error(ErrorKind::not_invertible,
                "series with zero constant term is not a unit: " + to_string());
  }
  // x = c0 (1 + t), t in the maximal ideal; (1 + t)^{-1} = sum (-t)^k, k <= order.
  const Rational inv_c0 = 1 / c0;
  QSeries t = *this * inv_c0;
  t.add_term(Exponent(ring_->size(), 0), -1);
  QSeries minus_t = -t;
  QSeries result = constant(ring_, 1);
  QSeries power = result;
  for (int k = 1; k <= ring_->order(); ++k) {
    power *= minus_t;
    if (power.is_zero()) break;
    result += power;
  }
  return result * inv_c0;
}

QSeries QSeries::pow(unsigned k) const {
  QSeries result = constant(ring_, 1);
  QSeries base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

QSeries QSeries::substitute(const std::map<std::string, Rational>& assignment) const {
  std::vector<std::string> remaining;
  std::vector<std::optional<Rational>> value(ring_->size());
  for (std::size_t i = 0; i < ring_->size(); ++i) {
    const auto& name = ring_->variables()[i];
    auto it = assignment.find(name);
    if (it == assignment.end()) {
      remaining.push_back(name);
    } else {
      value[i] = it->second;
    }
  }
  for (const auto& [name, v] : assignment) {
    if (!ring_->index_of(name)) {
      throw Error(ErrorKind::precondition, "substitution for unknown variable '" + name + "'");
    }
  }
  auto target = make_ring(remaining, ring_->order());
  QSeries r(target);
  Exponent e(target->size());
  for (const auto& [ex, c] : terms_) {
    Rational coeff = c;
    std::size_t j = 0;
    for (std::size_t i = 0; i < ex.size(); ++i) {
      if (value[i]) {
        for (int p = 0; p < ex[i]; ++p) coeff *= *value[i];
      } else {
        e[j++] = ex[i];
      }
    }
    r.add_term(e, coeff);
  }
  return r;
}

std::string QSeries::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << '-';
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit_coeff = mag == 1;
    bool wrote = false;
    if (!unit_coeff || total_degree(e) == 0) {
      out << teich::to_string(mag);
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) out << '*';
      out << ring_->variables()[i];
      if (e[i] > 1) out << '^' << e[i];
      wrote = true;
    }
  }
  return out.str();
}

bool operator==(const QSeries& a, const QSeries& b) {
  a.check_compatible(b);
  return a.terms_ == b.terms_;
}

RingPtr joined_ring(const Ring& a, const Ring& b) {
  std::vector<std::string> vars = a.variables();
  vars.insert(vars.end(), b.variables().begin(), b.variables().end());
  return make_ring(std::move(vars), std::max(a.order(), b.order()));
}

QSeries promote(const QSeries& x, const RingPtr& target) {
  std::vector<std::size_t> where;
  for (const auto& name : x.ring()->variables()) {
    auto idx = target->index_of(name);
    if (!idx) throw Error(ErrorKind::precondition, "target ring lacks variable '" + name + "'");
    where.push_back(*idx);
  }
  QSeries r(target);
  for (const auto& [ex, c] : x.terms()) {
    Exponent e(target->size(), 0);
    for (std::size_t i = 0; i < ex.size(); ++i) e[where[i]] = ex[i];
    r += QSeries::monomial(target, std::move(e), c);
  }
  return r;
}

QSeries add(const QSeries& x, const QSeries& y, Promotion promotion) {
  if (promotion == Promotion::strict || *x.ring() == *y.ring()) return x + y;
  auto ring = joined_ring(*x.ring(), *y.ring());
  return promote(x, ring) + promote(y, ring);
}

QSeries mul(const QSeries& x, const QSeries& y, Promotion promotion) {
  if (promotion == Promotion::strict || *x.ring() == *y.ring()) return x * y;
  auto ring = joined_ring(*x.ring(), *y.ring());
  return promote(x, ring) * promote(y, ring);
}

QSeries hensel_solve_quadratic(const QSeries& c2, const QSeries& c1, const QSeries& c0,
                               const Rational& root0) {
  const auto& ring = c0.ring();
  auto f = [&](const QSeries& r) { return c2 * r * r + c1 * r + c0; };
  auto df = [&](const QSeries& r) { return Rational(2) * (c2 * r) + c1; };

  QSeries r = QSeries::constant(ring, root0);
  if (sgn(f(r).constant_term()) != 0) {
    throw Error(ErrorKind::precondition,
                "initial value " + teich::to_string(root0) + " is not a root at q = 0");
  }
  if (sgn(df(r).constant_term()) == 0) {
    throw Error(ErrorKind::degenerate,
                "repeated root " + teich::to_string(root0) + " at q = 0 (parabolic element)");
  }
  // Correct modulo degree `precision`; Newton doubles it.
  for (int precision = 1; precision <= ring->order(); precision *= 2) {
    r -= f(r) * df(r).inverse();
  }
  if (!f(r).is_zero()) {
    throw Error(ErrorKind::numeric, "Newton iteration left a nonzero residual");
  }
  return r;
}

}  // namespace teich::qseries
