#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "teich/graphs/enumerate.hpp"
#include "teich/kz/associator.hpp"
#include "teich/kz/monodromy.hpp"
#include "teich/kz/mzv.hpp"
#include "teich/kz/transport.hpp"
#include "teich/oracle/zeta_oracle.hpp"

using namespace teich;
using namespace teich::kz;

namespace {

constexpr double kPi = std::numbers::pi;
const double kZeta2 = kPi * kPi / 6;

const UniversalAssociator& associator6() {
  static const UniversalAssociator u = universal_associator(6);
  return u;
}

// a^(s1-1) b ... a^(sk-1) b
std::string convergent_word(const std::vector<int>& s) {
  std::string w;
  for (int x : s) w += std::string(x - 1, 'a') + "b";
  return w;
}

RationalMatrix e(std::size_t n, std::size_t i, std::size_t j) { return RationalMatrix::unit(n, i, j); }

}  // namespace

TEST_CASE("mzv against independent sums") {
  CHECK(std::abs(mzv({2}).value - kZeta2) < 1e-10);
  const double z3 = oracle::direct_sum_zeta(3);
  CHECK(std::abs(mzv({3}).value - z3) < 1e-9);
  CHECK(std::abs(mzv({2, 1}).value - oracle::double_sum_zeta21()) < 1e-9);
  CHECK(std::abs(mzv({2, 1}).value - mzv({3}).value) < 1e-9);
  CHECK(std::abs(mzv({4}).value - std::pow(kPi, 4) / 90) < 1e-10);
  CHECK(std::abs(oracle::direct_sum_zeta(2) - kZeta2) < 1e-13);
  CHECK(mzv({3}).error < 1e-10);
  CHECK_THROWS_AS(mzv({1, 2}), Error);
  CHECK_THROWS_AS(mzv({}), Error);
  CHECK(!is_admissible({1}));
  CHECK(is_admissible({2, 1, 1}));
}

TEST_CASE("polylog at 1/2") {
  const double ln2 = std::log(2.0);
  CHECK(std::abs(multiple_polylog({1}, 0.5).value - ln2) < 1e-14);
  CHECK(std::abs(multiple_polylog({2}, 0.5).value - (kPi * kPi / 12 - ln2 * ln2 / 2)) < 1e-14);
  CHECK(std::abs(multiple_polylog({1, 1}, 0.5).value - ln2 * ln2 / 2) < 1e-14);
}

TEST_CASE("nilpotent pairs") {
  CHECK_THROWS_AS(NilpotentPair(RationalMatrix::identity(2), RationalMatrix(2, 2)), Error);
  CHECK_THROWS_AS(NilpotentPair(RationalMatrix(2, 2), RationalMatrix(3, 3)), Error);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 10; ++i) {
    auto p = random_nilpotent_pair(4, rng);
    CHECK(p.index_a() > 0);
    CHECK(p.index_b() <= 4);
  }
}

TEST_CASE("connection matrix closed forms") {
  auto zero = ode_connection_matrix(NilpotentPair(RationalMatrix(3, 3), RationalMatrix(3, 3)));
  CHECK(max_abs_diff(zero.phi, ComplexMatrix::identity(3)) < 1e-12);
  // B = 0: G0 = t^A is already normalized at 1.
  auto only_a = ode_connection_matrix(NilpotentPair(e(3, 0, 1) + e(3, 1, 2), RationalMatrix(3, 3)));
  CHECK(max_abs_diff(only_a.phi, ComplexMatrix::identity(3)) < 1e-9);

  for (auto reg : {Regularization::frobenius, Regularization::plain}) {
    ConnectionOptions o;
    o.regularization = reg;
    auto c = ode_connection_matrix(NilpotentPair(e(3, 0, 1), e(3, 1, 2)), o);
    // the plain scheme leaves an O(eps log^2 eps) boundary term
    const double tol = reg == Regularization::frobenius ? 1e-9 : 1e-5;
    CHECK(std::abs(std::abs(c.phi(0, 2)) - kZeta2) < tol);
    CHECK(std::abs(std::abs(c.phi(0, 2)) - kZeta2) <= c.error_estimate + 1e-12);
    CHECK(c.phi(0, 2).real() * kAssociatorAbSign > 0);
    CHECK(c.error_estimate < 1e-4);
  }
}

TEST_CASE("universal associator coefficients") {
  const auto& u = associator6();
  CHECK(u.coefficient("") == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(u.coefficient("a")) < 1e-8);
  CHECK(std::abs(u.coefficient("b")) < 1e-8);
  CHECK(std::abs(u.coefficient("ab") - kAssociatorAbSign * kZeta2) < 1e-6);
  CHECK(std::abs(u.coefficient("ab") + u.coefficient("ba")) < 1e-6);
  // Convergent words a^(s1-1) b ... carry (-1)^k zeta(s1, ..., sk) (mutual oracle with mzv).
  for (const std::vector<int>& s :
       {std::vector<int>{2}, {3}, {4}, {5}, {6}, {2, 1}, {3, 1}, {2, 2}, {2, 1, 1}, {4, 1}, {3, 2}, {2, 3},
        {3, 1, 1}, {2, 2, 1}, {2, 1, 2}, {2, 1, 1, 1}}) {
    const double sign = s.size() % 2 ? -1.0 : 1.0;
    INFO(convergent_word(s));
    CHECK(std::abs(u.coefficient(convergent_word(s)) - sign * mzv(s).value) < 1e-6);
  }
}

TEST_CASE("associator relations") {
  const auto& u = associator6();
  const auto& phi = u.coefficients;
  // shuffle relations for all pairs of words with |u| + |v| <= 6
  std::vector<freenc::Word> words{{}};
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (words[i].size() == 5) continue;
    for (std::uint8_t l = 0; l < 2; ++l) {
      auto w = words[i];
      w.push_back(l);
      words.push_back(w);
    }
  }
  double worst = 0;
  for (const auto& x : words) {
    for (const auto& y : words) {
      if (x.empty() || y.empty() || x.size() + y.size() > 6) continue;
      double rhs = 0;
      for (const auto& [w, mult] : freenc::shuffle(x, y)) rhs += double(mult) * phi.coefficient(w);
      worst = std::max(worst, std::abs(phi.coefficient(x) * phi.coefficient(y) - rhs));
    }
  }
  CHECK(worst < 1e-5);
  CHECK(freenc::grouplike_defect(phi) < 1e-5);

  // Phi(b, a) = Phi(a, b)^-1
  const auto inverse = freenc::nc_inverse(phi);
  const auto swapped = swap_letters(phi);
  double diff = 0;
  for (const auto& w : words) diff = std::max(diff, std::abs(inverse.coefficient(w) - swapped.coefficient(w)));
  for (const auto& [w, c] : inverse.terms()) diff = std::max(diff, std::abs(c - swapped.coefficient(w)));
  CHECK(diff < 1e-5);
}

TEST_CASE("ode and universal series agree") {
  const auto& u = associator6();
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<std::size_t> size(2, 4);
  for (int i = 0; i < 20; ++i) {
    const auto pair = random_nilpotent_pair(size(rng), rng);
    const auto ode = ode_connection_matrix(pair);
    const auto series = specialize_associator(u, pair);
    CHECK(!series.warning);
    const double diff = max_abs_diff(ode.phi, series.phi);
    CHECK(diff < 1e-5);
    CHECK(diff <= ode.error_estimate + series.error_estimate + 1e-9);
    // unipotent: (Phi - I)^n vanishes
    ComplexMatrix n = series.phi - ComplexMatrix::identity(pair.size());
    ComplexMatrix p = n;
    for (std::size_t k = 1; k < pair.size(); ++k) p = p * n;
    CHECK(max_abs(p) < 1e-6);
  }
  // commuting square-zero pair: Phi = I
  const auto a = e(2, 0, 1);
  CHECK(max_abs_diff(specialize_associator(u, NilpotentPair(a, a)).phi, ComplexMatrix::identity(2)) < 1e-6);
  // weight truncation warning
  RationalMatrix big(8, 8);
  for (std::size_t i = 0; i + 1 < 8; ++i) big(i, i + 1) = 1;
  CHECK(specialize_associator(u, NilpotentPair(big, big)).warning.has_value());
}

TEST_CASE("half Dehn monodromy") {
  const auto id = half_dehn_monodromy(RationalMatrix(3, 3));
  CHECK(id.exact == PiMatrix::identity(3));
  const auto n = e(3, 0, 2) * Rational(2);
  const auto m = half_dehn_monodromy(n);
  CHECK(m.exact == PiMatrix(3, {RationalMatrix::identity(3), n}));
  CHECK(std::abs(m.numeric(0, 2) - Complex(0, 2 * kPi)) < 1e-14);
  const auto res = e(3, 0, 1) + e(3, 1, 2) * Rational(-3, 2);
  const auto half = half_dehn_monodromy(res).exact;
  CHECK(half * half == PiMatrix::exp_pi_i(res, 2));
  CHECK(half.entry_string(0, 2) == "-3/4*(pi*i)^2");
  CHECK_THROWS_AS(half_dehn_monodromy(RationalMatrix::identity(2)), Error);
}

TEST_CASE("transport") {
  FormPath empty;
  CHECK(nilpotent_transport(empty) == ComplexMatrix::identity(1));

  FormPath log2{{LineSegment{0.5, 1.0}}, {RationalForm::dlog(0.0)}};
  auto t = nilpotent_transport(log2);
  CHECK(std::abs(t(0, 1) - std::log(2.0)) < 1e-8);
  CHECK(std::abs(t(0, 0) - 1.0) < 1e-12);

  // Chen: iterated integral of (dt/t, dt/(1-t)) over [eps, 1-eps] tends to zeta(2).
  const RationalForm w0 = RationalForm::dlog(0.0), w1 = RationalForm::dlog(1.0, -1.0);
  FormPath unit{{LineSegment{1e-4, 1 - 1e-4}}, {w0, w1}, 1e-5};
  CHECK(std::abs(nilpotent_transport(unit)(0, 2) - kZeta2) < 5e-3);
  auto reg = regularized_unit_transport({w0, w1});
  CHECK(std::abs(reg.phi(0, 2).real() - kZeta2) < 1e-8);

  // composition
  FormPath first{{LineSegment{Complex(0.3, 0.2), Complex(0.5, 1.0)}}, {w0, w1}};
  FormPath second{{ArcSegment{0.5, 1.0, kPi / 2, kPi / 6}}, {w0, w1}};
  FormPath both{{first.segments[0], second.segments[0]}, {w0, w1}};
  CHECK(max_abs_diff(nilpotent_transport(both), nilpotent_transport(second) * nilpotent_transport(first)) < 1e-8);

  CHECK_THROWS_AS(nilpotent_transport(FormPath{{LineSegment{-1.0, 1.0}}, {w0}}), Error);
  CHECK_THROWS_AS(nilpotent_transport(FormPath{{LineSegment{0.5, 0.7}, LineSegment{0.8, 0.9}}, {w0}}), Error);
}

TEST_CASE("homotopy invariance") {
  const std::vector<RationalForm> forms{RationalForm::dlog(0.0), RationalForm::dlog(1.0, -1.0),
                                        RationalForm::dlog(0.0)};
  const Complex a(-0.5, 0.5), b(1.5, 0.5);
  FormPath straight{{LineSegment{a, b}}, forms};
  FormPath warped{{LineSegment{a, b, 3.0}}, forms};
  CHECK(homotopy_invariance_check(straight, warped) < 1e-8);
  const Complex mid(0.4, 2.0);
  FormPath detour{{LineSegment{a, mid}, LineSegment{mid, b}}, forms};
  CHECK(homotopy_invariance_check(straight, detour) < 1e-6);
  // around 0 from above versus below
  FormPath above{{ArcSegment{0.0, 0.5, kPi, 0.0}}, forms};
  FormPath below{{ArcSegment{0.0, 0.5, -kPi, 0.0}}, forms};
  CHECK(homotopy_invariance_check(above, below) > 0.1);
  CHECK(std::abs(std::abs(nilpotent_transport(above)(0, 1) - nilpotent_transport(below)(0, 1)) - 2 * kPi) < 1e-8);
  CHECK_THROWS_AS(homotopy_invariance_check(straight, FormPath{{LineSegment{a, mid}}, forms}), Error);
}

TEST_CASE("groupoid evaluation") {
  const auto g = graphs::enumerate_trivalent(0, 4).front().graph;
  const auto edge = g.edges().front().id;
  const auto fresh = g.max_edge_id() + 1;
  const auto& u = associator6();

  ResidueMap zero{{edge, RationalMatrix(3, 3)}, {fresh, RationalMatrix(3, 3)}};
  auto w1 = graphs::compose_word(g, {graphs::Move::fusing(edge, fresh)});
  CHECK(max_abs_diff(evaluate_groupoid_word(w1, zero, u).value, ComplexMatrix::identity(3)) < 1e-12);

  ResidueMap pair{{edge, e(3, 0, 1)}, {fresh, e(3, 1, 2)}};
  auto back = graphs::compose_word(g, {graphs::Move::fusing(edge, fresh), graphs::Move::fusing(fresh, edge)});
  auto result = evaluate_groupoid_word(back, pair, u);
  CHECK(max_abs_diff(result.value, ComplexMatrix::identity(3)) < 1e-5);
  CHECK(result.warnings.empty());

  auto dehn = graphs::compose_word(g, {graphs::Move::half_dehn(edge), graphs::Move::half_dehn(edge)});
  CHECK(max_abs_diff(evaluate_groupoid_word(dehn, pair, u).value,
                     PiMatrix::exp_pi_i(e(3, 0, 1), 2).evaluate()) < 1e-12);

  ResidueMap missing{{edge, e(3, 0, 1)}};
  try {
    evaluate_groupoid_word(back, missing, u);
    FAIL("missing residue accepted");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::precondition);
    CHECK(err.index() == std::optional<std::size_t>(0));
  }

  const auto loop = graphs::one_vertex_graph(1, 1);
  auto simple = graphs::compose_word(loop, {graphs::Move::simple(loop.edges().front().id)});
  try {
    evaluate_groupoid_word(simple, {{loop.edges().front().id, RationalMatrix(2, 2)}}, u);
    FAIL("simple move evaluated");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::unsupported);
  }
}
