#include <doctest.h>

#include <random>

#include "teich/error.hpp"
#include "teich/qseries/belement.hpp"
#include "teich/qseries/qseries.hpp"

using namespace teich;
using namespace teich::qseries;

namespace {

QSeries random_series(const RingPtr& ring, std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-5, 5), deg(0, ring->order());
  QSeries x(ring);
  for (int t = 0; t < 6; ++t) {
    Exponent e(ring->size(), 0);
    int d = deg(rng);
    for (int k = 0; k < d; ++k) e[std::uniform_int_distribution<std::size_t>(0, e.size() - 1)(rng)]++;
    Rational c(coeff(rng), 1 + std::abs(coeff(rng)));
    c.canonicalize();
    x += QSeries::monomial(ring, e, c);
  }
  return x;
}

// Binomial series (1+x)^(1/2) = sum C(1/2, k) x^k, computed independently.
Rational binom_half(int k) {
  Rational c = 1;
  for (int i = 0; i < k; ++i) c = c * (Rational(1, 2) - i) / (i + 1);
  return c;
}

}  // namespace

TEST_CASE("canonical text and hand expansions") {
  auto r1 = make_ring({"q"}, 3);
  auto q = QSeries::variable(r1, "q");
  auto one = QSeries::constant(r1, 1);
  CHECK(((one + q) * (one - q)).to_string() == "1 - q^2");
  CHECK(QSeries(r1).to_string() == "0");

  auto r2 = make_ring({"q1", "q2"}, 1);
  auto q1 = QSeries::variable(r2, "q1"), q2 = QSeries::variable(r2, "q2");
  auto s = QSeries::constant(r2, 1) + q1 + q2;
  CHECK((s * s).to_string() == "1 + 2*q1 + 2*q2");

  auto r3 = make_ring({"q1", "q2"}, 3);
  auto x = QSeries::monomial(r3, {2, 1}, Rational(-1, 8)) + QSeries::variable(r3, "q1") * Rational(2) +
           QSeries::constant(r3, 1);
  CHECK(x.to_string() == "1 + 2*q1 - 1/8*q1^2*q2");
}

TEST_CASE("inverse and BElement") {
  auto r = make_ring({"q"}, 3);
  auto q = QSeries::variable(r, "q");
  auto one = QSeries::constant(r, 1);
  CHECK((one - q).inverse().to_string() == "1 + q + q^2 + q^3");
  CHECK(QSeries::constant(r, 2).inverse() == QSeries::constant(r, Rational(1, 2)));

  BElement bq(q);
  CHECK(bq * bq.inverse() == BElement::constant(r, 1));
  auto inv = invert(q * (one - q));
  CHECK(inv.denominator() == Exponent{1});
  CHECK(inv.numerator().to_string() == "1 + q + q^2 + q^3");

  auto r2 = make_ring({"q1", "q2"}, 3);
  BElement bad(QSeries::variable(r2, "q1") + QSeries::variable(r2, "q2"));
  CHECK(bad.classify() == Invertibility::no_unit_factor);
  CHECK_THROWS_AS(bad.inverse(), Error);
  CHECK(BElement(QSeries(r2)).classify() == Invertibility::zero);
}

TEST_CASE("substitution") {
  auto r = make_ring({"q1", "q2"}, 4);
  auto x = QSeries::constant(r, 1) + QSeries::variable(r, "q1") * QSeries::variable(r, "q2");
  auto y = x.substitute({{"q2", 0}});
  CHECK(y.to_string() == "1");
  CHECK(y.ring()->variables() == std::vector<std::string>{"q1"});
  auto all = x.substitute({{"q1", 2}, {"q2", 3}});
  CHECK(all.is_constant());
  CHECK(all.constant_term() == 7);

  auto rq = make_ring({"q"}, 3);
  BElement pole(QSeries::constant(rq, 1), {1});
  try {
    pole.substitute({{"q", 0}});
    FAIL("expected a pole error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::pole);
  }
}

TEST_CASE("ring laws and substitution homomorphism on random inputs") {
  std::mt19937 rng(11);
  auto r = make_ring({"q1", "q2", "q3"}, 4);
  for (int trial = 0; trial < 30; ++trial) {
    auto a = random_series(r, rng), b = random_series(r, rng), c = random_series(r, rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a - a == QSeries(r));
    // Only q = 0 commutes with truncation; nonzero values are checked on polynomials below.
    std::map<std::string, Rational> sub{{"q2", 0}, {"q3", 0}};
    CHECK((a * b).substitute(sub) == a.substitute(sub) * b.substitute(sub));
    CHECK((a + b).substitute(sub) == a.substitute(sub) + b.substitute(sub));
    if (sgn(a.constant_term()) != 0) {
      auto one = QSeries::constant(r, 1);
      CHECK(a * a.inverse() == one);
      CHECK(a.inverse() * a == one);
    }
  }
}

TEST_CASE("substituting values into low-degree polynomials") {
  std::mt19937 rng(3);
  auto r = make_ring({"q1", "q2"}, 6);
  auto small = make_ring({"q1", "q2"}, 3);
  for (int trial = 0; trial < 10; ++trial) {
    auto a = promote(random_series(small, rng), r), b = promote(random_series(small, rng), r);
    std::map<std::string, Rational> sub{{"q2", Rational(1, 3)}};
    CHECK((a * b).substitute(sub) == a.substitute(sub) * b.substitute(sub));
  }
}

TEST_CASE("promotion") {
  auto ra = make_ring({"q1"}, 2);
  auto rb = make_ring({"q2"}, 3);
  auto a = QSeries::variable(ra, "q1"), b = QSeries::variable(rb, "q2");
  CHECK_THROWS_AS(a + b, Error);
  auto s = mul(a, b, Promotion::max_order);
  CHECK(s.order() == 3);
  CHECK(s.to_string() == "q1*q2");
}

TEST_CASE("hensel_solve_quadratic") {
  const int N = 6;
  auto r = make_ring({"q"}, N);
  auto q = QSeries::variable(r, "q");
  auto one = QSeries::constant(r, 1);
  auto root = hensel_solve_quadratic(one, QSeries(r), -(one + q), 1);
  for (int k = 0; k <= N; ++k) CHECK(root.coefficient({k}) == binom_half(k));
  CHECK(root.coefficient({1}) == Rational(1, 2));
  CHECK(root.coefficient({2}) == Rational(-1, 8));
  CHECK(root * root - (one + q) == QSeries(r));

  auto minus = hensel_solve_quadratic(one, QSeries(r), -one, -1);
  CHECK(minus == QSeries::constant(r, -1));

  try {
    hensel_solve_quadratic(one, QSeries::constant(r, -2), one, 1);
    FAIL("expected degenerate");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::degenerate);
  }
  CHECK_THROWS_AS(hensel_solve_quadratic(one, QSeries(r), -one, 2), Error);
}
