#include <doctest.h>

#include <random>

#include "teich/freenc/lie.hpp"
#include "teich/freenc/ncseries.hpp"
#include "teich/oracle/algebra_oracle.hpp"

using namespace teich;
using namespace teich::freenc;

namespace {

FreeWord random_word(int r, int len, std::mt19937& rng) {
  std::uniform_int_distribution<int> letter(1, r), sign(0, 1);
  FreeWord w;
  for (int i = 0; i < len; ++i) w.push_back(sign(rng) ? letter(rng) : -letter(rng));
  return w;
}

NCSeries X(int i, int r = 2, int m = 3) { return NCSeries::letter(r, m, i); }

}  // namespace

TEST_CASE("embeddings") {
  CHECK(magnus_embed(2, 4, {1, -1}) == NCSeries::one(2, 4));
  auto e = exp_embed(1, 3, {1});
  CHECK(e.coefficient({}) == 1);
  CHECK(e.coefficient({0}) == 1);
  CHECK(e.coefficient({0, 0}) == Rational(1, 2));
  CHECK(e.coefficient({0, 0, 0}) == Rational(1, 6));

  // [g1, g2] = g1 g2 g1^-1 g2^-1: by hand, the degree <= 2 part is 1 + X1X2 - X2X1.
  auto c = magnus_embed(2, 3, {1, 2, -1, -2});
  auto low = NCSeries::one(2, 3) + X(0) * X(1) - X(1) * X(0);
  CHECK(c.homogeneous(0) + c.homogeneous(1) + c.homogeneous(2) == low);
  CHECK(!c.homogeneous(3).is_zero());
}

TEST_CASE("magnus injectivity on short words") {
  std::mt19937 rng(21);
  for (int t = 0; t < 200; ++t) {
    auto w = random_word(2, 1 + t % 6, rng);
    const bool trivial = free_reduce(w).empty();
    CHECK((magnus_embed(2, 5, w) == NCSeries::one(2, 5)) == trivial);
    CHECK(magnus_embed(2, 5, w) * magnus_embed(2, 5, free_inverse(w)) == NCSeries::one(2, 5));
  }
}

TEST_CASE("log, exp and BCH defect") {
  CHECK(nc_log(NCSeries::one(2, 4)).is_zero());
  auto x = X(0), y = X(1);
  auto lhs = nc_exp(x + y);
  auto rhs = nc_exp(x) * nc_exp(y);
  CHECK(!(lhs == rhs));
  // BCH oracle: log(e^x e^y) = x + y + [x,y]/2 + ([x,[x,y]] + [y,[y,x]])/12 + ...
  auto z = nc_log(rhs);
  auto bch = x + y + bracket(x, y) * Rational(1, 2) +
             (bracket(x, bracket(x, y)) + bracket(y, bracket(y, x))) * Rational(1, 12);
  CHECK(z == bch);

  std::mt19937 rng(4);
  for (int t = 0; t < 20; ++t) {
    auto g = magnus_embed(3, 4, random_word(3, 5, rng));
    CHECK(nc_exp(nc_log(g)) == g);
  }
  CHECK_THROWS_AS(nc_log(x), Error);
  CHECK_THROWS_AS(nc_exp(NCSeries::one(2, 3)), Error);
}

TEST_CASE("Hopf structure") {
  std::mt19937 rng(8);
  for (int t = 0; t < 20; ++t) {
    auto w = random_word(2, 4, rng);
    auto g = exp_embed(2, 5, w);
    CHECK(is_grouplike(g));
    CHECK(is_primitive(nc_log(g)));
  }
  auto xy = X(0, 2, 4) * X(1, 2, 4);
  CHECK(!is_grouplike(xy));
  CHECK(!is_primitive(xy));
  CHECK(!is_grouplike(magnus_embed(2, 3, {1})));  // 1 + X is not grouplike
  CHECK(is_primitive(bracket(X(0, 2, 4), X(1, 2, 4))));

  auto p = exp_embed(2, 4, {1, 2}), q = exp_embed(2, 4, {-2}), r = exp_embed(2, 4, {1});
  CHECK(torsor_compose(torsor_compose(p, q), r) == torsor_compose(p, torsor_compose(q, r)));
  CHECK(torsor_compose(p, nc_inverse(p)) == NCSeries::one(2, 4));
  CHECK(torsor_compose(p, q) == exp_embed(2, 4, {1, 2, -2}));
  CHECK_THROWS_AS(torsor_compose(p, xy), Error);
}

TEST_CASE("shuffle product") {
  auto s = shuffle({0}, {1});
  CHECK(s.size() == 2);
  auto t = shuffle({0}, {0});
  CHECK(t.at({0, 0}) == 2);
  long total = 0;
  for (const auto& [w, c] : shuffle({0, 1}, {1, 0, 0})) total += c;
  CHECK(total == 10);  // C(5, 2)
}

TEST_CASE("Lyndon and Witt dimensions") {
  const std::vector<std::int64_t> r2{2, 1, 2, 3, 6};
  for (int k = 1; k <= 5; ++k) CHECK(witt_dim(2, k) == r2[k - 1]);
  CHECK(witt_dim(1, 1) == 1);
  CHECK(witt_dim(1, 2) == 0);
  CHECK(witt_dim(3, 2) == 3);
  for (int r = 1; r <= 4; ++r) {
    for (int k = 1; k <= 6; ++k) {
      CHECK(static_cast<std::int64_t>(hall_basis(r, k).size()) == witt_dim(r, k));
      CHECK(oracle::brute_force_lyndon_count(r, k) == witt_dim(r, k));
    }
  }
  for (int k = 1; k <= 4; ++k) CHECK(oracle::left_normed_lie_dim(3, k) == witt_dim(3, k));
  CHECK(bracketing_string({0, 0, 1}) == "[x1,[x1,x2]]");
  for (int r = 1; r <= 4; ++r) {
    auto gf = witt_generating_series(r, 8);
    for (int k = 0; k <= 8; ++k) CHECK(gf[k] == mpz_class(ideal_graded_dim(r, k)));
  }
}

TEST_CASE("primitives are the Lie polynomials") {
  for (int k = 1; k <= 5; ++k) CHECK(primitive_dim(2, k) == witt_dim(2, k));
  for (int k = 1; k <= 3; ++k) CHECK(primitive_dim(3, k) == witt_dim(3, k));

  auto p = bracket(X(0, 2, 4), bracket(X(0, 2, 4), X(1, 2, 4))) * Rational(3) + X(1, 2, 4);
  auto coords = lie_coordinates(p);
  CHECK(lie_to_series(coords, 2, 4) == p);
  CHECK_THROWS_AS(lie_coordinates(X(0, 2, 4) * X(1, 2, 4)), Error);
}

TEST_CASE("ideal quotient dimensions") {
  CHECK(ideal_graded_dim(2, 3) == 8);
  CHECK(ideal_graded_dim(3, 2) == 9);
  for (int r = 1; r <= 3; ++r) {
    for (int m = 1; m <= 3; ++m) {
      // Products of positive letters of length <= m span Q[F_r] / I^(m+1).
      std::vector<FreeWord> words{{}};
      std::vector<FreeWord> layer{{}};
      for (int len = 1; len <= m; ++len) {
        std::vector<FreeWord> next;
        for (const auto& w : layer) {
          for (int l = 1; l <= r; ++l) {
            auto x = w;
            x.push_back(l);
            next.push_back(x);
          }
        }
        words.insert(words.end(), next.begin(), next.end());
        layer = next;
      }
      std::int64_t expected = 0;
      for (int k = 0; k <= m; ++k) expected += ideal_graded_dim(r, k);
      CHECK(static_cast<std::int64_t>(magnus_span_rank(r, m, words)) == expected);
    }
  }
}

TEST_CASE("polylogarithmic quotients") {
  auto p1 = polylog_dims(1, 1, 1);
  CHECK(p1.pol_dim == 2);
  CHECK(p1.log_dim == 0);
  CHECK(polylog_dims(0, 4, 1).pol_dim == 3);
  CHECK(polylog_dims_rank(2, 2).log_dim == 1);
  CHECK(polylog_dims_rank(2, 3).derived_span == 0);
  // [L^2, L^2]_4 = 0 for two letters: L_2 is one-dimensional.
  CHECK(polylog_dims_rank(2, 4).derived_span == 0);
  CHECK(polylog_dims_rank(2, 4).log_dim == 3);
  for (int r = 1; r <= 3; ++r) {
    for (int k = 1; k <= 6; ++k) {
      auto d = polylog_dims_rank(r, k);
      CHECK(d.pol_dim - d.log_dim == (k == 1 ? r : 0));
      CHECK(d.derived_span == oracle::derived_square_dim(r, k));
      if (k >= 2) CHECK(d.pol_dim == oracle::metabelian_dim(r, k));
    }
  }
}

TEST_CASE("weight grading") {
  auto w11 = weight_graded_dims(1, 1, 3);
  CHECK(w11 == std::map<int, std::int64_t>{{-3, 8}});
  auto w03 = weight_graded_dims(0, 3, 2);
  CHECK(w03 == std::map<int, std::int64_t>{{-4, 4}});
  auto w12 = weight_graded_dims(1, 2, 2);
  CHECK(w12 == std::map<int, std::int64_t>{{-2, 4}, {-3, 4}, {-4, 1}});
  std::int64_t total = 0;
  for (const auto& [w, d] : weight_graded_dims(2, 3, 4)) total += d;
  CHECK(total == ideal_graded_dim(6, 4));
}
