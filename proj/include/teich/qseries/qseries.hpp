#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "teich/qseries/rational.hpp"

namespace teich::qseries {

/// Variables of a truncated series ring together with its truncation order.
/// Two rings are compatible when both fields agree; identity of the
/// shared_ptr is not required.
class Ring {
 public:
  Ring(std::vector<std::string> variables, int order);

  const std::vector<std::string>& variables() const noexcept { return variables_; }
  std::size_t size() const noexcept { return variables_.size(); }
  int order() const noexcept { return order_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.order_ == b.order_ && a.variables_ == b.variables_;
  }

 private:
  std::vector<std::string> variables_;
  int order_;
};

using RingPtr = std::shared_ptr<const Ring>;

/// Variables are sorted and deduplicated.
RingPtr make_ring(std::vector<std::string> variables, int order);

using Exponent = std::vector<int>;

int total_degree(const Exponent& e);

/// Monomial order used for storage and printing: total degree ascending,
/// then exponent vectors in descending lexicographic order (so q1 precedes q2).
struct MonomialLess {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// How binary operations treat operands from different rings.
enum class Promotion {
  strict,       // rings must agree, otherwise Error(precondition)
  max_order,    // union of variables, truncation at the larger order
};

/// Truncated multivariate power series over Q: every stored monomial has
/// total degree <= order, zero coefficients are never stored.
class QSeries {
 public:
  using Terms = std::map<Exponent, Rational, MonomialLess>;

  explicit QSeries(RingPtr ring);

  static QSeries constant(RingPtr ring, const Rational& c);
  static QSeries variable(RingPtr ring, std::string_view name);
  static QSeries monomial(RingPtr ring, Exponent exponent, const Rational& c = 1);

  const RingPtr& ring() const noexcept { return ring_; }
  const Terms& terms() const noexcept { return terms_; }
  int order() const noexcept { return ring_->order(); }

  Rational coefficient(const Exponent& e) const;
  Rational constant_term() const;
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  /// Lowest total degree present; nullopt for zero.
  std::optional<int> valuation() const;
  /// Componentwise minimum exponent over the support (largest monomial dividing x).
  std::optional<Exponent> monomial_gcd() const;

  QSeries operator-() const;
  QSeries& operator+=(const QSeries& other);
  QSeries& operator-=(const QSeries& other);
  QSeries& operator*=(const QSeries& other);
  QSeries& operator*=(const Rational& c);

  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend QSeries operator*(QSeries a, const Rational& c) { return a *= c; }
  friend QSeries operator*(const Rational& c, QSeries a) { return a *= c; }

  /// Multiply by a monomial, dropping terms pushed beyond the order.
  QSeries shifted(const Exponent& e) const;
  /// Exact division by a monomial that divides every term.
  QSeries divided_by_monomial(const Exponent& e) const;

  /// Two-sided inverse at the truncation order. Requires a nonzero constant term.
  QSeries inverse() const;
  QSeries pow(unsigned k) const;

  /// Exact evaluation of the listed variables; the result lives in a ring
  /// over the remaining variables with the same order.
  QSeries substitute(const std::map<std::string, Rational>& assignment) const;

  /// Canonical text: "1 + 2*q1 - 1/8*q1^2*q2", "0" for zero.
  std::string to_string() const;

  friend bool operator==(const QSeries& a, const QSeries& b);

 private:
  void add_term(const Exponent& e, const Rational& c);
  void check_compatible(const QSeries& other) const;

  RingPtr ring_;
  Terms terms_;
};

/// Re-embed x into a ring whose variables contain x's variables.
QSeries promote(const QSeries& x, const RingPtr& target);
RingPtr joined_ring(const Ring& a, const Ring& b);

QSeries add(const QSeries& x, const QSeries& y, Promotion promotion);
QSeries mul(const QSeries& x, const QSeries& y, Promotion promotion);

/// Root r of c2 r^2 + c1 r + c0 with r = root0 mod (q), by Newton iteration
/// with precision doubling. The residual is exactly zero in the truncated ring.
/// Throws Error(precondition) when root0 is not a root at q = 0 and
/// Error(degenerate) when it is a repeated root there.
QSeries hensel_solve_quadratic(const QSeries& c2, const QSeries& c1, const QSeries& c0,
                               const Rational& root0);

}  // namespace teich::qseries
