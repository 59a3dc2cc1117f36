#include <doctest.h>

#include <random>

#include "teich/error.hpp"
#include "teich/graphs/enumerate.hpp"
#include "teich/schottky/schottky.hpp"

using namespace teich;
using namespace teich::schottky;
using graphs::one_vertex_graph;
using graphs::theta_graph;

namespace {



// Closed, reduced, cyclically reduced walks from v of length <= max_len.
std::vector<EdgePath> cyclic_words(const graphs::StableGraph& g, VertexId v, std::size_t max_len) {
  std::vector<EdgePath> out;
  std::vector<EdgePath> layer{{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<EdgePath> next;
    for (const auto& p : layer) {
      const VertexId at = p.empty() ? v : g.terminal(p.back());
      for (const auto h : g.oriented_edges()) {
        if (g.origin(h) != at) continue;
        if (!p.empty() && h == p.back().reversed()) continue;
        auto q = p;
        q.push_back(h);
        next.push_back(q);
        if (g.terminal(h) == v && is_cyclically_reduced(q)) out.push_back(q);
      }
    }
    layer = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("Tate specialization") {
  AlphaMap alpha{{{0, true}, Rational(0)}, {{0, false}, std::nullopt}};
  SchottkyContext ctx(one_vertex_graph(1, 0), alpha, 6);
  auto m = phi(ctx, {0, true});
  auto q = ctx.q(0);
  CHECK(m == ProjMat({BElement(q), BElement::constant(ctx.ring(), 0), BElement::constant(ctx.ring(), 0),
                      BElement::constant(ctx.ring(), 1)}));
  auto image = mobius_apply(m, BElement::constant(ctx.ring(), 1));
  CHECK(std::get<BElement>(image) == BElement(q));
  CHECK(is_infinity(mobius_apply(m, Infinity{})));
  auto fp = fixed_point_data(ctx, {{0, true}});
  REQUIRE(fp.attractive);
  CHECK(fp.attractive->is_zero());
  CHECK(!fp.repulsive);
  CHECK(fp.multiplier == q);
  for (const auto& r : cross_ratio_residual(m, fp)) CHECK(r.is_zero());
}

TEST_CASE("determinant, fixed points and closed fiber of generators") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    auto g = theta_graph();
    SchottkyContext ctx(g, random_alpha(g, rng), 6);
    for (const auto h : g.oriented_edges()) {
      auto m = phi(ctx, h);
      // Hand expansion: det = s^2 [(ah - am q)(-am + ah q) + ah am (1 - q)^2] = q.
      CHECK(m.det() == BElement(ctx.q(h.edge)));
      const Rational ah = *ctx.alpha(h), am = *ctx.alpha(h.reversed());
      auto fixed_a = mobius_apply(m, BElement::constant(ctx.ring(), ah));
      auto fixed_b = mobius_apply(m, BElement::constant(ctx.ring(), am));
      CHECK(std::get<BElement>(fixed_a) == BElement::constant(ctx.ring(), ah));
      CHECK(std::get<BElement>(fixed_b) == BElement::constant(ctx.ring(), am));
      auto cf = closed_fiber(ctx, h);
      CHECK(cf.rank == 1);
      CHECK(cf.image == AlphaValue{ah});
      CHECK((phi(ctx, h.reversed()) * m).is_scalar());
      CHECK(phi(ctx, h.reversed()).projectively_equal(m.adjugate()));
    }
  }
}

TEST_CASE("fixed points of generators and powers") {
  std::mt19937_64 rng(3);
  auto g = one_vertex_graph(2, 0);
  SchottkyContext ctx(g, random_alpha(g, rng), 6);
  const OrientedEdge h{1, false};
  auto fp = fixed_point_data(ctx, {h});
  CHECK(*fp.attractive == QSeries::constant(ctx.ring(), *ctx.alpha(h)));
  CHECK(*fp.repulsive == QSeries::constant(ctx.ring(), *ctx.alpha(h.reversed())));
  CHECK(fp.multiplier == ctx.q(1));

  auto fp2 = fixed_point_data(ctx, {h, h});
  CHECK(fp2.multiplier == ctx.q(1) * ctx.q(1));
  CHECK(*fp2.attractive == *fp.attractive);
}

TEST_CASE("words: anti-homomorphism, determinants, rejection") {
  std::mt19937_64 rng(5);
  auto g = theta_graph();
  SchottkyContext ctx(g, random_alpha(g, rng), 5);
  CHECK(word_to_element(ctx, {}) == ProjMat::identity(ctx.ring()));

  const OrientedEdge a{0, true}, b{1, false};  // 0 -> 1 then 1 -> 0
  auto ab = word_to_element(ctx, {a, b});
  CHECK(ab == phi(ctx, b) * phi(ctx, a));
  CHECK(ab.det() == BElement(ctx.q(0) * ctx.q(1)));

  try {
    word_to_element(ctx, {a, a.reversed()});
    FAIL("expected rejection");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::not_composable);
    CHECK(*e.index() == 1);
  }
  CHECK((phi(ctx, a.reversed()) * phi(ctx, a)).is_scalar());
  CHECK_THROWS_AS(word_to_element(ctx, {a, a}), Error);

  for (const auto& rho : cyclic_words(g, 0, 4)) {
    for (const auto& sigma : cyclic_words(g, 0, 2)) {
      EdgePath cat = rho;
      cat.insert(cat.end(), sigma.begin(), sigma.end());
      if (cat[rho.size() - 1] == cat[rho.size()].reversed()) continue;
      CHECK(word_to_element(ctx, cat) ==
            word_to_element(ctx, sigma) * word_to_element(ctx, rho));
    }
  }
}

TEST_CASE("free generators") {
  std::mt19937_64 rng(9);
  CHECK(free_generators(SchottkyContext(one_vertex_graph(3, 0), random_alpha(one_vertex_graph(3, 0), rng), 3))
            .size() == 3);
  auto theta = theta_graph();
  SchottkyContext ctx(theta, random_alpha(theta, rng), 3);
  auto gens = free_generators(ctx);
  CHECK(gens.size() == 2);
  for (const auto& p : gens) {
    CHECK_NOTHROW(check_reduced_path(theta, p));
    CHECK(is_closed(theta, p));
    CHECK(theta.origin(p.front()) == ctx.base_vertex());
  }
  for (int gg = 2; gg <= 3; ++gg) {
    for (const auto& eg : graphs::enumerate_trivalent(gg, 0)) {
      SchottkyContext c(eg.graph, random_alpha(eg.graph, rng), 2);
      CHECK(static_cast<int>(free_generators(c).size()) == gg);
    }
  }
}

TEST_CASE("cross-ratio relation on random words") {
  std::mt19937_64 rng(13);
  int checked = 0;
  for (const auto& eg : graphs::enumerate_trivalent(2, 0)) {
    SchottkyContext ctx(eg.graph, random_alpha(eg.graph, rng), 6);
    auto words = cyclic_words(eg.graph, ctx.base_vertex(), 4);
    for (std::size_t i = 0; i < words.size(); i += 2) {
      auto fp = fixed_point_data(ctx, words[i]);
      CHECK(sgn(fp.multiplier.constant_term()) == 0);
      for (const auto& r : cross_ratio_residual(word_to_element(ctx, words[i]), fp)) CHECK(r.is_zero());
      ++checked;
    }
  }
  CHECK(checked > 5);
}

TEST_CASE("context validation and rigidified alphas") {
  auto g = one_vertex_graph(1, 0);
  CHECK_THROWS_AS(SchottkyContext(g, {{{0, true}, std::nullopt}, {{0, false}, std::nullopt}}, 3), Error);
  CHECK_THROWS_AS(SchottkyContext(g, {{{0, true}, Rational(1)}, {{0, false}, Rational(1)}}, 3), Error);
  CHECK_THROWS_AS(SchottkyContext(one_vertex_graph(1, 1), {}, 3), Error);
  std::mt19937_64 rng(1);
  for (const auto& eg : graphs::enumerate_trivalent(2, 0)) {
    CHECK_NOTHROW(SchottkyContext(eg.graph, alpha_from_rigidification(eg.graph, rng), 3));
  }
  auto parsed = parse_alpha("+0=1/2,-0=inf");
  CHECK(parsed.at({0, true}) == AlphaValue{Rational(1, 2)});
  CHECK(!parsed.at({0, false}));
  CHECK(to_string(parse_path("+0, -1,2")) == "+0,-1,+2");
}
