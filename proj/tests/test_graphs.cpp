#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "teich/error.hpp"
#include "teich/graphs/canonical.hpp"
#include "teich/graphs/enumerate.hpp"
#include "teich/graphs/fusing.hpp"
#include "teich/graphs/graph_json.hpp"
#include "teich/graphs/groupoid.hpp"
#include "teich/graphs/rigidification.hpp"
#include "teich/oracle/graph_oracle.hpp"

using namespace teich;
using namespace teich::graphs;

namespace {

// Tail numbers sitting at the same vertex as tail 1.
std::set<int> partners_of_first(const StableGraph& g) {
  const VertexId v = g.tail_with_number(1)->vertex;
  std::set<int> out;
  for (const auto& t : g.tails()) {
    if (t.vertex == v && *t.number != 1) out.insert(*t.number);
  }
  return out;
}

StableGraph relabel(const StableGraph& g, std::mt19937& rng) {
  std::vector<VertexId> ids = g.vertices();
  std::vector<VertexId> fresh(ids.size());
  std::iota(fresh.begin(), fresh.end(), 100);
  std::shuffle(fresh.begin(), fresh.end(), rng);
  auto map = [&](VertexId v) {
    return fresh[std::find(ids.begin(), ids.end(), v) - ids.begin()];
  };
  std::vector<Edge> edges;
  int next = 50;
  for (const auto& e : g.edges()) {
    bool flip = rng() % 2;
    edges.push_back({next++, map(flip ? e.target : e.source), map(flip ? e.source : e.target)});
  }
  std::vector<Tail> tails;
  for (const auto& t : g.tails()) tails.push_back({t.id + 30, map(t.vertex), t.number});
  return StableGraph(fresh, edges, tails);
}

}  // namespace

TEST_CASE("validate") {
  CHECK(validate(one_vertex_graph(0, 3)).ok());
  auto bad = validate(one_vertex_graph(0, 2));
  REQUIRE(!bad.ok());
  CHECK(bad.violations.front().kind == Violation::Kind::unstable);
  CHECK(validate(four_tail_graph(1, 2, 3, 4)).ok());

  StableGraph dangling({0}, {{0, 0, 7}}, {{1, 0, 1}});
  auto rep = validate(dangling);
  CHECK(rep.has_structural_errors());

  StableGraph split({0, 1}, {{0, 0, 0}, {1, 1, 1}}, {{1, 0, 1}, {2, 1, 2}});
  auto rep2 = validate(split);
  CHECK(!rep2.ok());
  CHECK(!rep2.has_structural_errors());
  CHECK_THROWS_AS(genus(split), Error);
}

TEST_CASE("genus, type and extend") {
  CHECK(genus(one_vertex_graph(3, 2)) == 3);
  CHECK(genus(four_tail_graph(1, 2, 3, 4)) == 0);
  CHECK(genus(theta_graph()) == 2);
  CHECK(is_trivalent(one_vertex_graph(0, 3)));
  CHECK(type_of(one_vertex_graph(1, 1)) == std::pair{1, 1});

  auto x = extend(one_vertex_graph(0, 3));
  CHECK(x.vertices().size() == 4);
  CHECK(x.edges().size() == 6);
  CHECK(loops_of(x).size() == 3);
  CHECK(genus(x) == 3);
  CHECK(x.tails().empty());
  CHECK(validate(x).ok());
  CHECK(extend(theta_graph()) == theta_graph());
  CHECK(genus(extend(one_vertex_graph(1, 1))) == 2);
}

TEST_CASE("rigidification and coordinates") {
  auto g03 = one_vertex_graph(0, 3);
  auto tau = find_rigidification(g03);
  CHECK(tau.at(0, Marker::zero) == Branch::of_tail(1));
  CHECK(tau.at(0, Marker::one) == Branch::of_tail(2));
  CHECK(tau.at(0, Marker::infinity) == Branch::of_tail(3));

  auto g04 = four_tail_graph(1, 2, 3, 4);
  auto t04 = find_rigidification(g04);
  CHECK(rigidification_violations(g04, t04).empty());

  auto cs11 = coordinate_system(one_vertex_graph(1, 1), find_rigidification(one_vertex_graph(1, 1)));
  CHECK(cs11.alpha_variables.size() == 0);
  CHECK(cs11.q_variables.size() == 1);

  auto g05 = one_vertex_graph(0, 5);
  auto cs05 = coordinate_system(g05, find_rigidification(g05));
  CHECK(cs05.alpha_variables.size() == 2);
  CHECK(cs05.q_variables.empty());

  Rigidification broken = t04;
  broken.tau[0][1] = broken.tau[0][0];
  CHECK(!rigidification_violations(g04, broken).empty());
  CHECK_THROWS_AS(coordinate_system(g04, broken), Error);

  // Non-trivalent stable graphs: the coordinate count identity.
  for (auto g : {one_vertex_graph(2, 0), one_vertex_graph(1, 3), one_vertex_graph(0, 6), theta_graph()}) {
    auto [gg, n] = type_of(g);
    auto cs = coordinate_system(g, find_rigidification(g));
    CHECK(static_cast<int>(cs.dimension()) == 3 * gg - 3 + n);
  }
}

TEST_CASE("enumeration against the brute-force oracle") {
  struct Case { int g, n; };
  for (Case c : {Case{0, 3}, Case{0, 4}, Case{1, 1}, Case{0, 5}, Case{1, 2}, Case{2, 0}, Case{2, 1}, Case{1, 3}}) {
    CAPTURE(c.g);
    CAPTURE(c.n);
    auto graphs = enumerate_trivalent(c.g, c.n);
    CHECK(graphs.size() == oracle::brute_force_trivalent_count(c.g, c.n));
    for (const auto& eg : graphs) {
      CHECK(validate(eg.graph).ok());
      CHECK(is_trivalent(eg.graph));
      CHECK(type_of(eg.graph) == std::pair{c.g, c.n});
      CHECK(static_cast<int>(eg.graph.vertices().size()) == 2 * c.g - 2 + c.n);
      CHECK(static_cast<int>(eg.graph.edges().size()) == 3 * c.g - 3 + c.n);
    }
  }
  CHECK(enumerate_trivalent(0, 3).size() == 1);
  CHECK(enumerate_trivalent(0, 4).size() == 3);
  CHECK(enumerate_trivalent(1, 1).size() == 1);
  CHECK(enumerate_trivalent(0, 5).size() == 15);
  CHECK(enumerate_trivalent(0, 6).size() == 105);
  CHECK_THROWS_AS(enumerate_trivalent(4, 1), Error);
  CHECK_THROWS_AS(enumerate_trivalent(0, 2), Error);
}

TEST_CASE("canonical forms are invariant under relabeling") {
  std::mt19937 rng(5);
  for (auto [g, n] : {std::pair{1, 2}, std::pair{2, 1}, std::pair{0, 5}, std::pair{3, 0}}) {
    for (const auto& eg : enumerate_trivalent(g, n)) {
      for (int k = 0; k < 3; ++k) {
        auto h = relabel(eg.graph, rng);
        CHECK(canonical_form(h) == eg.certificate);
        CHECK(isomorphic(h, eg.graph));
      }
    }
  }
  CHECK(!isomorphic(four_tail_graph(1, 2, 3, 4), four_tail_graph(1, 3, 2, 4)));
}

TEST_CASE("fusing rewrite") {
  auto g = four_tail_graph(1, 2, 3, 4);
  auto results = fusing_rewrite(g, 0, 5);
  REQUIRE(results.size() == 2);
  std::set<std::set<int>> pairings;
  for (const auto& r : results) {
    CHECK(r.new_edge == 5);
    CHECK(is_trivalent(r.graph));
    CHECK(type_of(r.graph) == std::pair{0, 4});
    pairings.insert(partners_of_first(r.graph));
  }
  CHECK(pairings == std::set<std::set<int>>{{3}, {4}});

  // Going back along the right branch recovers the original pairing.
  bool returned = false;
  for (const auto& r2 : fusing_rewrite(results[0].graph, 5, 0)) {
    if (isomorphic(r2.graph, g)) returned = true;
  }
  CHECK(returned);

  CHECK_THROWS_AS(fusing_rewrite(one_vertex_graph(1, 1), 0), Error);

  // Every edge of every corpus graph: two trivalent results of the same type.
  for (auto [gg, n] : {std::pair{1, 2}, std::pair{2, 0}, std::pair{0, 5}}) {
    for (const auto& eg : enumerate_trivalent(gg, n)) {
      for (const auto& e : eg.graph.edges()) {
        if (e.is_loop()) continue;
        auto rs = fusing_rewrite(eg.graph, e.id);
        CHECK(rs.size() == 2);
        for (const auto& r : rs) CHECK(type_of(r.graph) == std::pair{gg, n});
      }
    }
  }
}

TEST_CASE("groupoid words") {
  auto g = four_tail_graph(1, 2, 3, 4);
  auto empty = compose_word(g, {});
  CHECK(empty.empty());
  CHECK(empty.end() == g);

  auto ok = compose_word(g, {Move::fusing(0, 1), Move::half_dehn(1)});
  CHECK(ok.size() == 2);

  try {
    compose_word(g, {Move::fusing(0, 1), Move::half_dehn(0)});
    FAIL("expected rejection");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::not_composable);
    REQUIRE(e.index());
    CHECK(*e.index() == 1);
  }
  CHECK_THROWS_AS(compose_word(one_vertex_graph(1, 1), {Move::simple(0), Move::fusing(0, 1)}), Error);

  // Recorded endpoints must chain.
  std::vector<Step> steps{{Move::half_dehn(0), g, g}, {Move::half_dehn(0), four_tail_graph(1, 3, 2, 4), g}};
  try {
    compose_steps(steps);
    FAIL("expected rejection");
  } catch (const Error& e) {
    CHECK(*e.index() == 1);
  }
}

TEST_CASE("graph JSON round trip") {
  for (const auto& eg : enumerate_trivalent(1, 2)) {
    CHECK(graph_from_json(to_json(eg.graph)) == eg.graph);
  }
  auto word = compose_word(four_tail_graph(1, 2, 3, 4), {Move::fusing(0, 1, 1), Move::half_dehn(1)});
  auto back = word_from_json(to_json(word));
  CHECK(back.moves() == word.moves());
  CHECK(back.end() == word.end());
  CHECK_THROWS_AS(graph_from_json(nlohmann::json::parse(R"({"edges": []})")), Error);
}
