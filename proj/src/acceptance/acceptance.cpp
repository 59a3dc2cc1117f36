#include "teich/acceptance/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "teich/error.hpp"
#include "teich/freenc/lie.hpp"
#include "teich/freenc/ncseries.hpp"
#include "teich/graphs/enumerate.hpp"
#include "teich/graphs/fusing.hpp"
#include "teich/graphs/rigidification.hpp"
#include "teich/kz/associator.hpp"
#include "teich/kz/monodromy.hpp"
#include "teich/kz/mzv.hpp"
#include "teich/kz/transport.hpp"
#include "teich/oracle/algebra_oracle.hpp"
#include "teich/oracle/graph_oracle.hpp"
#include "teich/oracle/zeta_oracle.hpp"
#include "teich/schottky/schottky.hpp"

namespace teich::acceptance {

namespace {

using graphs::OrientedEdge;
using graphs::StableGraph;
using schottky::EdgePath;

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && passed) {
      passed = false;
      detail.str("");
      detail << "failed: " << what;
    }
  }
  template <class T>
  void note(const std::string& key, const T& value) {
    if (passed) detail << key << "=" << value << " ";
  }
};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

std::vector<std::uint64_t> seeds(const AcceptanceOptions& o) {
  if (o.quick) return {o.seed};
  return {o.seed, o.seed + 1};
}

// Tail-free trivalent graphs of genus 1..3.
std::vector<StableGraph> corpus() {
  std::vector<StableGraph> out{graphs::one_vertex_graph(1, 0)};
  for (int g = 2; g <= 3; ++g) {
    for (const auto& eg : graphs::enumerate_trivalent(g, 0)) out.push_back(eg.graph);
  }
  return out;
}

// Random reduced walk of the given length from v; empty if stuck.
EdgePath random_walk(const StableGraph& g, graphs::VertexId v, std::size_t length, std::mt19937_64& rng) {
  EdgePath p;
  graphs::VertexId at = v;
  for (std::size_t i = 0; i < length; ++i) {
    std::vector<OrientedEdge> choices;
    for (const auto h : g.oriented_edges()) {
      if (g.origin(h) == at && (p.empty() || h != p.back().reversed())) choices.push_back(h);
    }
    if (choices.empty()) return {};
    p.push_back(choices[std::uniform_int_distribution<std::size_t>(0, choices.size() - 1)(rng)]);
    at = g.terminal(p.back());
  }
  return p;
}

// Random cyclically reduced closed walk of length 1..max_len at a random
// vertex (some vertices, such as the centre of three bridges, carry none).
EdgePath random_cyclic_word(const StableGraph& g, std::size_t max_len, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> len(1, max_len), vertex(0, g.vertices().size() - 1);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    EdgePath p = random_walk(g, g.vertices()[vertex(rng)], len(rng), rng);
    if (!p.empty() && g.terminal(p.back()) == g.origin(p.front()) && schottky::is_cyclically_reduced(p)) return p;
  }
  throw Error(ErrorKind::precondition, "no cyclically reduced word found");
}

const kz::UniversalAssociator& associator6() {
  static const kz::UniversalAssociator u = kz::universal_associator(6);
  return u;
}

kz::RationalMatrix unit3(std::size_t i, std::size_t j) { return kz::RationalMatrix::unit(3, i, j); }

void schottky_determinant(const AcceptanceOptions& o, Outcome& out) {
  const auto graphs = corpus();
  int checks = 0;
  for (auto seed : seeds(o)) {
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < 50; ++trial) {
      const auto& g = graphs[static_cast<std::size_t>(trial) % graphs.size()];
      schottky::SchottkyContext ctx(g, schottky::random_alpha(g, rng), 6);
      for (const auto h : g.oriented_edges()) {
        out.require(schottky::phi(ctx, h).det() == schottky::BElement(ctx.q(h.edge)),
                    "det phi_h != q_h for edge " + std::to_string(h.edge));
        ++checks;
      }
    }
  }
  out.note("exact_checks", checks);
}

void cross_ratio(const AcceptanceOptions& o, Outcome& out) {
  const auto graphs = corpus();
  int words = 0;
  for (auto seed : seeds(o)) {
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < 20; ++trial) {
      const auto& g = graphs[static_cast<std::size_t>(trial) % graphs.size()];
      schottky::SchottkyContext ctx(g, schottky::random_alpha(g, rng), 6);
      const EdgePath w = random_cyclic_word(g, 4, rng);
      const auto fp = schottky::fixed_point_data(ctx, w);
      out.require(sgn(fp.multiplier.constant_term()) == 0, "multiplier with nonzero constant term on " +
                                                                schottky::to_string(w));
      for (const auto& r : schottky::cross_ratio_residual(schottky::word_to_element(ctx, w), fp)) {
        out.require(r.is_zero(), "nonzero residual on " + schottky::to_string(w));
      }
      ++words;
    }
  }
  out.note("words", words);
}

void tate(const AcceptanceOptions&, Outcome& out) {
  schottky::AlphaMap alpha{{{0, true}, Rational(0)}, {{0, false}, std::nullopt}};
  schottky::SchottkyContext ctx(graphs::one_vertex_graph(1, 0), alpha, 6);
  const auto zero = schottky::BElement::constant(ctx.ring(), 0), one = schottky::BElement::constant(ctx.ring(), 1);
  out.require(schottky::phi(ctx, {0, true}) == schottky::ProjMat({schottky::BElement(ctx.q(0)), zero, zero, one}),
              "phi != [[q,0],[0,1]]");
  out.note("phi", "[[q0,0],[0,1]]");
}

void anti_homomorphism(const AcceptanceOptions& o, Outcome& out) {
  const auto graphs = corpus();
  int pairs = 0;
  for (auto seed : seeds(o)) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> len(1, 3);
    int made = 0;
    while (made < 100) {
      const auto& g = graphs[static_cast<std::size_t>(made) % graphs.size()];
      schottky::SchottkyContext ctx(g, schottky::random_alpha(g, rng), 5);
      const auto& vs = g.vertices();
      const auto v = vs[std::uniform_int_distribution<std::size_t>(0, vs.size() - 1)(rng)];
      const EdgePath rho = random_walk(g, v, len(rng), rng);
      if (rho.empty()) continue;
      EdgePath sigma = random_walk(g, g.terminal(rho.back()), len(rng), rng);
      if (sigma.empty() || sigma.front() == rho.back().reversed()) continue;
      EdgePath both = rho;
      both.insert(both.end(), sigma.begin(), sigma.end());
      const auto whole = schottky::word_to_element(ctx, both);
      out.require(whole == schottky::word_to_element(ctx, sigma) * schottky::word_to_element(ctx, rho),
                  "(rho sigma)* != sigma* rho* for " + schottky::to_string(both));
      const OrientedEdge h = rho.front();
      out.require((schottky::phi(ctx, h.reversed()) * schottky::phi(ctx, h)).is_scalar(),
                  "phi_-h phi_h not scalar");
      ++made;
    }
    pairs += made;
  }
  out.note("pairs", pairs);
}

void coordinate_counts(const AcceptanceOptions&, Outcome& out) {
  int trivalent = 0, rigidified = 0;
  for (int g = 0; g <= 4; ++g) {
    for (int n = 0; 2 * g - 2 + n <= 6; ++n) {
      if (2 * g - 2 + n <= 0) continue;
      for (const auto& eg : graphs::enumerate_trivalent(g, n)) {
        const auto& gr = eg.graph;
        out.require(static_cast<int>(gr.vertices().size()) == 2 * g - 2 + n, "#V on " + eg.certificate);
        out.require(static_cast<int>(gr.edges().size()) == 3 * g - 3 + n, "#E on " + eg.certificate);
        ++trivalent;
        // the graph and the contractions of its non-loop edges are stable graphs of the same type
        std::vector<StableGraph> stable{gr};
        if (2 * g - 2 + n <= 4) {
          for (const auto& e : gr.edges()) {
            if (!e.is_loop()) stable.push_back(graphs::fusing_rewrite(gr, e.id).front().contracted);
          }
        }
        for (const auto& s : stable) {
          const auto cs = graphs::coordinate_system(s, graphs::find_rigidification(s));
          out.require(static_cast<int>(cs.dimension()) == 3 * g - 3 + n, "#E_tau + #E on " + eg.certificate);
          ++rigidified;
        }
      }
    }
  }
  for (auto [g, n, expected] : {std::tuple{0, 3, 1}, {0, 4, 3}, {1, 1, 1}}) {
    const auto count = static_cast<std::int64_t>(graphs::enumerate_trivalent(g, n).size());
    out.require(count == expected, "count (" + std::to_string(g) + "," + std::to_string(n) + ")");
    out.require(count == static_cast<std::int64_t>(oracle::brute_force_trivalent_count(g, n)),
                "oracle count (" + std::to_string(g) + "," + std::to_string(n) + ")");
  }
  out.note("trivalent", trivalent);
  out.note("rigidified", rigidified);
}

void kz_engine(const AcceptanceOptions& o, Outcome& out) {
  const double zeta2 = std::numbers::pi * std::numbers::pi / 6;
  const auto phi = kz::ode_connection_matrix(kz::NilpotentPair(unit3(0, 1), unit3(1, 2)));
  const double d13 = std::abs(std::abs(phi.phi(0, 2)) - zeta2);
  out.require(d13 < 1e-6, "|Phi13| - pi^2/6 = " + sci(d13));
  const double d3 = std::abs(kz::mzv({3}).value - oracle::direct_sum_zeta(3));
  out.require(d3 < 1e-9, "mzv(3) vs direct sum " + sci(d3));
  const double d21 = std::abs(kz::mzv({2, 1}).value - kz::mzv({3}).value);
  out.require(d21 < 1e-9, "mzv(2,1) - mzv(3) = " + sci(d21));
  const double d21o = std::abs(kz::mzv({2, 1}).value - oracle::double_sum_zeta21());
  out.require(d21o < 1e-9, "mzv(2,1) vs double sum " + sci(d21o));
  double worst = 0;
  for (auto seed : seeds(o)) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> size(2, 4);
    for (int i = 0; i < 20; ++i) {
      const auto pair = kz::random_nilpotent_pair(size(rng), rng);
      worst = std::max(worst, kz::max_abs_diff(kz::ode_connection_matrix(pair).phi,
                                               kz::specialize_associator(associator6(), pair).phi));
    }
  }
  out.require(worst < 1e-5, "ode vs series " + sci(worst));
  out.note("phi13", phi.phi(0, 2).real());
  out.note("d_mzv3", sci(d3));
  out.note("ode_vs_series", sci(worst));
}

void associator_relations(const AcceptanceOptions&, Outcome& out) {
  const auto& u = associator6();
  const auto& phi = u.coefficients;
  std::vector<freenc::Word> words{{}};
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (words[i].size() == 6) continue;
    for (std::uint8_t l = 0; l < 2; ++l) {
      auto w = words[i];
      w.push_back(l);
      words.push_back(w);
    }
  }
  double shuffle = 0;
  for (const auto& x : words) {
    for (const auto& y : words) {
      if (x.empty() || y.empty() || x.size() + y.size() > 6) continue;
      double rhs = 0;
      for (const auto& [w, m] : freenc::shuffle(x, y)) rhs += double(m) * phi.coefficient(w);
      shuffle = std::max(shuffle, std::abs(phi.coefficient(x) * phi.coefficient(y) - rhs));
    }
  }
  const double coproduct = freenc::grouplike_defect(phi);
  const auto inv = freenc::nc_inverse(phi);
  const auto swapped = kz::swap_letters(phi);
  double inversion = 0;
  for (const auto& w : words) inversion = std::max(inversion, std::abs(inv.coefficient(w) - swapped.coefficient(w)));
  const double single = std::max(std::abs(u.coefficient("a")), std::abs(u.coefficient("b")));
  out.require(shuffle < 1e-5 && coproduct < 1e-5, "shuffle defect " + sci(std::max(shuffle, coproduct)));
  out.require(inversion < 1e-5, "Phi(b,a) Phi(a,b) defect " + sci(inversion));
  out.require(single < 1e-8, "single-letter coefficient " + sci(single));
  out.note("shuffle", sci(shuffle));
  out.note("inversion", sci(inversion));
  out.note("single", sci(single));
}

void half_dehn(const AcceptanceOptions& o, Outcome& out) {
  int cases = 0;
  for (auto seed : seeds(o)) {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 10; ++i) {
      std::uniform_int_distribution<int> d(-3, 3);
      // N = u v^T with v^T u = 0 squares to zero
      const std::size_t n = 3;
      kz::RationalMatrix u(n, 1), v(1, n);
      for (std::size_t k = 0; k < n; ++k) {
        u(k, 0) = d(rng);
        v(0, k) = d(rng);
      }
      v(0, 2) = 0;
      u(2, 0) = 1;
      Rational dot = u(0, 0) * v(0, 0) + u(1, 0) * v(0, 1);
      if (sgn(dot) != 0) {
        if (sgn(u(0, 0)) != 0) {
          v(0, 0) -= dot / u(0, 0);
        } else {
          v(0, 1) -= dot / u(1, 0);
        }
      }
      kz::RationalMatrix nn(n, n);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) nn(a, b) = u(a, 0) * v(0, b);
      out.require((nn * nn).is_zero(), "sampled N does not square to zero");
      const auto m = kz::half_dehn_monodromy(nn);
      out.require(m.exact == kz::PiMatrix(n, {kz::RationalMatrix::identity(n), nn}), "exp(pi i N) != I + pi i N");
      ++cases;
    }
    std::mt19937_64 rng2(seed);
    for (int i = 0; i < 10; ++i) {
      const auto res = kz::random_nilpotent_pair(4, rng2).a();
      const auto half = kz::half_dehn_monodromy(res).exact;
      out.require(half * half == kz::PiMatrix::exp_pi_i(res, 2), "(delta^1/2)^2 != exp(2 pi i Res)");
      ++cases;
    }
  }
  out.note("exact_cases", cases);
}

void free_algebra(const AcceptanceOptions&, Outcome& out) {
  for (int r = 1; r <= 4; ++r) {
    const auto dims = freenc::ideal_graded_dims(r, 6);
    for (int m = 0; m <= 6; ++m) {
      out.require(dims[static_cast<std::size_t>(m)] == static_cast<std::int64_t>(std::pow(r, m)),
                  "ideal dims r=" + std::to_string(r));
    }
    for (int k = 1; k <= 8; ++k) {
      const auto w = freenc::witt_dim(r, k);
      out.require(static_cast<std::int64_t>(freenc::hall_basis(r, k).size()) == w, "Hall basis size");
      out.require(oracle::brute_force_lyndon_count(r, k) == w, "Lyndon brute force");
    }
    const auto gf = freenc::witt_generating_series(r, 8);
    for (int k = 0; k <= 8; ++k) {
      out.require(gf[static_cast<std::size_t>(k)] == mpz_class(static_cast<long>(std::pow(r, k))),
                  "generating function r=" + std::to_string(r));
    }
    for (int k = 1; k <= 6; ++k) {
      const auto p = freenc::polylog_dims_rank(r, k);
      out.require(p.pol_dim - p.log_dim == (k == 1 ? r : 0), "Pol - Log identity");
      const auto lie = oracle::left_normed_lie_dim(r, k);
      const auto derived = oracle::derived_square_dim(r, k);
      const auto log_oracle = k == 1 ? 0 : lie - derived;
      out.require(p.log_dim == log_oracle, "Log dim vs bracket-span oracle r=" + std::to_string(r) +
                                               " k=" + std::to_string(k));
      out.require(p.pol_dim == lie - derived, "Pol dim vs bracket-span oracle");
    }
  }
  out.note("ranks", "1..4");
}

void hopf(const AcceptanceOptions& o, Outcome& out) {
  int words = 0;
  for (auto seed : seeds(o)) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> len(0, 6), sign(0, 1);
    for (int i = 0; i < 50; ++i) {
      const int r = 1 + i % 3;
      std::uniform_int_distribution<int> letter(1, r);
      freenc::FreeWord w;
      for (int k = len(rng); k > 0; --k) w.push_back(sign(rng) ? letter(rng) : -letter(rng));
      const auto x = freenc::exp_embed(r, 5, w);
      out.require(freenc::is_grouplike(x), "exp_embed not grouplike");
      out.require(freenc::is_primitive(freenc::nc_log(x)), "log not primitive");
      ++words;
    }
  }
  out.note("words", words);
}

void iterated_integrals(const AcceptanceOptions& o, Outcome& out) {
  using kz::Complex;
  const kz::FormPath log2{{kz::LineSegment{0.5, 1.0}}, {kz::RationalForm::dlog(0.0)}};
  const double dlog2 = std::abs(kz::nilpotent_transport(log2)(0, 1) - std::log(2.0));
  out.require(dlog2 < 1e-8, "log 2 entry off by " + sci(dlog2));

  const std::vector<kz::RationalForm> forms{kz::RationalForm::dlog(0.0), kz::RationalForm::dlog(1.0, -1.0),
                                            kz::RationalForm::dlog(0.0)};
  double worst = 0;
  int pairs = 0;
  for (auto seed : seeds(o)) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> re(-1.5, 2.5), im(0.3, 2.0);
    // the region Im z > 0.25 is convex and free of poles
    for (int i = 0; i < 10; ++i) {
      const Complex a(re(rng), im(rng)), b(re(rng), im(rng)), mid(re(rng), im(rng));
      const kz::FormPath straight{{kz::LineSegment{a, b}}, forms};
      const kz::FormPath bent{{kz::LineSegment{a, mid, 2.0}, kz::LineSegment{mid, b}}, forms};
      worst = std::max(worst, kz::homotopy_invariance_check(straight, bent));
      ++pairs;
    }
  }
  out.require(worst < 1e-6, "homotopic deviation " + sci(worst));
  const double pi = std::numbers::pi;
  const kz::FormPath above{{kz::ArcSegment{0.0, 0.5, pi, 0.0}}, forms};
  const kz::FormPath below{{kz::ArcSegment{0.0, 0.5, -pi, 0.0}}, forms};
  const double control = kz::homotopy_invariance_check(above, below);
  out.require(control > 0.1, "negative control deviation " + sci(control));
  out.note("log2_err", sci(dlog2));
  out.note("homotopic_pairs", pairs);
  out.note("max_dev", sci(worst));
  out.note("control", sci(control));
}

void groupoid(const AcceptanceOptions&, Outcome& out) {
  const auto g = graphs::enumerate_trivalent(0, 4).front().graph;
  const auto e = g.edges().front().id;
  const auto e2 = g.max_edge_id() + 1;
  try {
    graphs::compose_word(g, {graphs::Move::fusing(e, e2), graphs::Move::half_dehn(e)});
    out.require(false, "removed edge accepted");
  } catch (const Error& err) {
    out.require(err.kind() == ErrorKind::not_composable && err.index() == std::optional<std::size_t>(1),
                "rejection not at index 1");
  }
  out.require(graphs::compose_word(g, {graphs::Move::fusing(e, e2), graphs::Move::half_dehn(e2)}).size() == 2,
              "valid word rejected");
  try {
    graphs::compose_steps({{graphs::Move::half_dehn(e), g, g}, {graphs::Move::half_dehn(e), g,
                                                                graphs::apply_move(g, graphs::Move::fusing(e, e2))}});
    out.require(false, "mismatched step target accepted");
  } catch (const Error& err) {
    out.require(err.kind() == ErrorKind::not_composable && err.index() == std::optional<std::size_t>(1),
                "step rejection not at index 1");
  }
  const auto word = graphs::compose_word(g, {graphs::Move::fusing(e, e2), graphs::Move::fusing(e2, e)});
  const auto result = kz::evaluate_groupoid_word(word, {{e, unit3(0, 1)}, {e2, unit3(1, 2)}}, associator6());
  const double dev = kz::max_abs_diff(result.value, kz::ComplexMatrix::identity(3));
  out.require(dev < 1e-5, "Phi(B,A) Phi(A,B) - I = " + sci(dev));
  out.note("inverse_dev", sci(dev));
}

struct Criterion {
  const char* name;
  double budget_seconds;  // 0 when no runtime bound is set
  std::function<void(const AcceptanceOptions&, Outcome&)> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list{
      {"Schottky determinant identity", 5, schottky_determinant},
      {"fixed-point cross-ratio", 30, cross_ratio},
      {"Tate specialization", 0, tate},
      {"anti-homomorphism and inverses", 0, anti_homomorphism},
      {"coordinate and enumeration counts", 0, coordinate_counts},
      {"KZ engine", 60, kz_engine},
      {"associator relations to weight 6", 0, associator_relations},
      {"half-Dehn monodromy", 0, half_dehn},
      {"free-algebra suite", 0, free_algebra},
      {"Hopf checks", 0, hopf},
      {"iterated integrals", 0, iterated_integrals},
      {"groupoid evaluation", 0, groupoid},
  };
  return list;
}

}  // namespace

CriterionResult run_criterion(int id, const AcceptanceOptions& options) {
  if (id < 1 || id > kCriteria) throw Error(ErrorKind::precondition, "criterion id must lie in [1, 12]");
  const auto& c = criteria()[static_cast<std::size_t>(id - 1)];
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    c.run(options, out);
  } catch (const std::exception& e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (c.budget_seconds > 0) out.require(seconds < c.budget_seconds, "runtime " + sci(seconds) + " s over budget");
  std::string detail = out.detail.str();
  while (!detail.empty() && detail.back() == ' ') detail.pop_back();
  return {id, c.name, out.passed, detail, seconds};
}

std::vector<CriterionResult> run_all(const AcceptanceOptions& options) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriteria; ++id) out.push_back(run_criterion(id, options));
  return out;
}

std::string format_line(const CriterionResult& r, bool with_time) {
  char head[96];
  if (with_time) {
    std::snprintf(head, sizeof head, "[%s] %2d  %s (%.2f s)", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(),
                  r.seconds);
  } else {
    std::snprintf(head, sizeof head, "[%s] %2d  %s", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str());
  }
  return std::string(head) + (r.detail.empty() ? "" : ": " + r.detail);
}

}  // namespace teich::acceptance
