#include "teich/schottky/schottky.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

#include "teich/error.hpp"
#include "teich/graphs/rigidification.hpp"

namespace teich::schottky {

using qseries::make_ring;

std::string to_string(const AlphaValue& a) { return a ? teich::to_string(*a) : "inf"; }

AlphaMap parse_alpha(const std::string& text) {
  AlphaMap out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::parse, "alpha assignment '" + item + "' lacks '='");
    const auto h = graphs::parse_oriented_edge(item.substr(0, eq));
    const auto value = item.substr(eq + 1);
    out[h] = (value == "inf" || value == "oo") ? AlphaValue{} : AlphaValue{parse_rational(value)};
  }
  return out;
}

SchottkyContext::SchottkyContext(StableGraph graph, AlphaMap alpha, int order,
                                 std::optional<VertexId> base)
    : graph_(std::move(graph)), alpha_(std::move(alpha)) {
  if (!graph_.tails().empty()) {
    throw Error(ErrorKind::precondition, "Schottky groups are attached to tail-free graphs; extend first");
  }
  if (graph_.vertices().empty() || !graphs::is_connected(graph_)) {
    throw Error(ErrorKind::precondition, "Schottky context needs a connected graph");
  }
  base_ = base.value_or(graph_.vertices().front());
  if (!graph_.has_vertex(base_)) throw Error(ErrorKind::precondition, "unknown base vertex");

  std::map<VertexId, std::vector<OrientedEdge>> at;
  for (const auto h : graph_.oriented_edges()) {
    if (!alpha_.count(h)) throw Error(ErrorKind::precondition, "no alpha value for " + graphs::to_string(h));
    at[graph_.terminal(h)].push_back(h);
  }
  for (const auto& [h, a] : alpha_) {
    if (!graph_.find_edge(h.edge)) {
      throw Error(ErrorKind::precondition, "alpha given for unknown edge " + graphs::to_string(h));
    }
    if (!a && !alpha_.at(h.reversed())) {
      throw Error(ErrorKind::precondition,
                  "E_inf contains both " + graphs::to_string(h) + " and its reverse");
    }
    const auto& b = alpha_.at(h.reversed());
    if (a && b && *a == *b) {
      throw Error(ErrorKind::precondition, "alpha_e = alpha_-e for e = " + std::to_string(h.edge));
    }
  }
  for (const auto& [v, hs] : at) {
    for (std::size_t i = 0; i < hs.size(); ++i) {
      for (std::size_t j = i + 1; j < hs.size(); ++j) {
        const auto &a = alpha_.at(hs[i]), &b = alpha_.at(hs[j]);
        if (a == b) {
          throw Error(ErrorKind::precondition,
                      "alpha values of " + graphs::to_string(hs[i]) + " and " + graphs::to_string(hs[j]) +
                          " coincide at vertex " + std::to_string(v) + " (" + to_string(a) + ")");
        }
      }
    }
  }
  std::vector<std::string> names;
  for (const auto& e : graph_.edges()) names.push_back(q_name(e.id));
  ring_ = make_ring(std::move(names), order);
}

const AlphaValue& SchottkyContext::alpha(OrientedEdge h) const {
  auto it = alpha_.find(h);
  if (it == alpha_.end()) throw Error(ErrorKind::precondition, "no oriented edge " + graphs::to_string(h));
  return it->second;
}

int SchottkyContext::order() const { return ring_->order(); }

std::string SchottkyContext::q_name(EdgeId e) { return "q" + std::to_string(e); }

QSeries SchottkyContext::q(EdgeId e) const { return QSeries::variable(ring_, q_name(e)); }

std::vector<OrientedEdge> SchottkyContext::infinite_edges() const {
  std::vector<OrientedEdge> out;
  for (const auto& [h, a] : alpha_) {
    if (!a) out.push_back(h);
  }
  return out;
}

namespace {

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-40, 40), den(1, 12);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

}  // namespace

AlphaMap random_alpha(const StableGraph& graph, std::mt19937_64& rng) {
  AlphaMap out;
  std::set<Rational> used;
  for (const auto h : graph.oriented_edges()) {
    Rational r;
    do {
      r = random_rational(rng);
    } while (!used.insert(r).second);
    out[h] = r;
  }
  return out;
}

AlphaMap alpha_from_rigidification(const StableGraph& graph, std::mt19937_64& rng) {
  const auto tau = graphs::find_rigidification(graph);
  AlphaMap out;
  std::set<Rational> used{0, 1};
  for (const auto& [v, images] : tau.tau) {
    for (auto m : graphs::kMarkers) {
      const auto& b = images[static_cast<int>(m)];
      if (!b.is_edge()) continue;
      out[b.oriented_edge()] =
          m == graphs::Marker::infinity ? AlphaValue{} : AlphaValue{Rational(static_cast<int>(m))};
    }
  }
  for (const auto h : graph.oriented_edges()) {
    if (out.count(h)) continue;
    Rational r;
    do {
      r = random_rational(rng);
    } while (!used.insert(r).second);
    out[h] = r;
  }
  return out;
}

ProjMat phi(const SchottkyContext& ctx, OrientedEdge h) {
  if (!ctx.graph().find_edge(h.edge)) {
    throw Error(ErrorKind::precondition, "no edge " + std::to_string(h.edge) + " in the context graph");
  }
  const auto& ring = ctx.ring();
  const QSeries q = ctx.q(h.edge);
  const QSeries one = QSeries::constant(ring, 1);
  const AlphaValue& ah = ctx.alpha(h);
  const AlphaValue& am = ctx.alpha(h.reversed());
  auto b = [](const QSeries& s) { return BElement(s); };
  auto c = [&](const Rational& r) { return QSeries::constant(ring, r); };

  if (!am) return ProjMat({b(q), b(c(*ah) * (one - q)), b(c(0)), b(one)});
  if (!ah) return ProjMat({b(one), b(c(-*am) * (one - q)), b(c(0)), b(q)});
  const Rational s = 1 / (*ah - *am);
  return ProjMat({b((c(*ah) - c(*am) * q) * s), b(c(-*ah * *am) * (one - q) * s), b((one - q) * s),
                  b((c(-*am) + c(*ah) * q) * s)});
}

EdgePath parse_path(const std::string& text) {
  EdgePath out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (!item.empty()) out.push_back(graphs::parse_oriented_edge(item));
  }
  return out;
}

std::string to_string(const EdgePath& path) {
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += ",";
    out += graphs::to_string(path[i]);
  }
  return out;
}

void check_reduced_path(const StableGraph& graph, const EdgePath& path) {
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (!graph.find_edge(path[i].edge)) {
      throw Error(ErrorKind::not_composable, "unknown edge " + std::to_string(path[i].edge), i);
    }
    if (i == 0) continue;
    if (graph.terminal(path[i - 1]) != graph.origin(path[i])) {
      throw Error(ErrorKind::not_composable,
                  "step " + std::to_string(i) + " does not start where step " + std::to_string(i - 1) + " ends",
                  i);
    }
    if (path[i] == path[i - 1].reversed()) {
      throw Error(ErrorKind::not_composable,
                  "path is not reduced: step " + std::to_string(i) + " backtracks", i);
    }
  }
}

bool is_closed(const StableGraph& graph, const EdgePath& path) {
  return path.empty() || graph.terminal(path.back()) == graph.origin(path.front());
}

bool is_cyclically_reduced(const EdgePath& path) {
  return path.empty() || path.size() == 1 || path.back() != path.front().reversed();
}

ProjMat word_to_element(const SchottkyContext& ctx, const EdgePath& path) {
  check_reduced_path(ctx.graph(), path);
  ProjMat m = ProjMat::identity(ctx.ring());
  for (const auto& h : path) m = phi(ctx, h) * m;
  return m;
}

std::vector<EdgePath> free_generators(const SchottkyContext& ctx) {
  const auto& g = ctx.graph();
  std::map<VertexId, EdgePath> to_vertex{{ctx.base_vertex(), {}}};
  std::set<EdgeId> tree;
  std::queue<VertexId> frontier;
  frontier.push(ctx.base_vertex());
  while (!frontier.empty()) {
    const VertexId v = frontier.front();
    frontier.pop();
    for (const auto h : g.oriented_edges()) {
      if (g.origin(h) != v || tree.count(h.edge)) continue;
      const VertexId w = g.terminal(h);
      if (to_vertex.count(w)) continue;
      tree.insert(h.edge);
      auto p = to_vertex[v];
      p.push_back(h);
      to_vertex[w] = p;
      frontier.push(w);
    }
  }
  std::vector<EdgePath> out;
  for (const auto& e : g.edges()) {
    if (tree.count(e.id)) continue;
    const OrientedEdge h{e.id, true};
    EdgePath p = to_vertex.at(g.origin(h));
    p.push_back(h);
    const auto& back = to_vertex.at(g.terminal(h));
    for (auto it = back.rbegin(); it != back.rend(); ++it) p.push_back(it->reversed());
    out.push_back(std::move(p));
  }
  return out;
}

namespace {

QSeries series_entry(const ProjMat& m, int i, int j) {
  auto s = m(i, j).as_series();
  if (!s) throw Error(ErrorKind::precondition, "fixed points need a matrix with series entries");
  return *s;
}

}  // namespace

FixedPointData fixed_point_data(const ProjMat& gamma, const AlphaValue& attractive0,
                                const AlphaValue& repulsive0) {
  const QSeries al = series_entry(gamma, 0, 0), be = series_entry(gamma, 0, 1);
  const QSeries c = series_entry(gamma, 1, 0), d = series_entry(gamma, 1, 1);
  if (attractive0 == repulsive0) {
    throw Error(ErrorKind::degenerate, "fixed points coincide at q = 0 (parabolic element)");
  }
  if ((!attractive0 || !repulsive0) && !c.is_zero()) {
    throw Error(ErrorKind::unsupported,
                "fixed point near infinity moves with q; choose alpha values with E_inf empty");
  }
  auto root = [&](const Rational& r0) { return hensel_solve_quadratic(c, d - al, -be, r0); };
  FixedPointData out{std::nullopt, std::nullopt, QSeries(gamma.ring())};
  if (attractive0) out.attractive = root(*attractive0);
  if (repulsive0) out.repulsive = root(*repulsive0);

  if (!repulsive0) {
    out.multiplier = al * d.inverse();
  } else if (!attractive0) {
    out.multiplier = d * al.inverse();
  } else {
    const QSeries lam = c * *out.attractive + d;
    if (sgn(lam.constant_term()) == 0) {
      throw Error(ErrorKind::degenerate, "attractive eigenvalue vanishes at q = 0");
    }
    out.multiplier = (c * *out.repulsive + d) * lam.inverse();
  }
  return out;
}

FixedPointData fixed_point_data(const SchottkyContext& ctx, const EdgePath& path) {
  if (path.empty()) throw Error(ErrorKind::precondition, "the identity has no fixed-point data");
  check_reduced_path(ctx.graph(), path);
  if (!is_closed(ctx.graph(), path)) throw Error(ErrorKind::precondition, "path is not closed");
  if (!is_cyclically_reduced(path)) throw Error(ErrorKind::precondition, "path is not cyclically reduced");
  return fixed_point_data(word_to_element(ctx, path), ctx.alpha(path.back()),
                          ctx.alpha(path.front().reversed()));
}

std::vector<QSeries> cross_ratio_residual(const ProjMat& gamma, const FixedPointData& data) {
  const QSeries al = series_entry(gamma, 0, 0), be = series_entry(gamma, 0, 1);
  const QSeries c = series_entry(gamma, 1, 0), d = series_entry(gamma, 1, 1);
  const QSeries& b = data.multiplier;
  const auto& ring = gamma.ring();
  using Poly = std::vector<QSeries>;  // coefficients in z
  auto poly = [&](QSeries c0, QSeries c1) { return Poly{std::move(c0), std::move(c1)}; };
  auto times = [&](const Poly& x, const Poly& y) {
    Poly r(x.size() + y.size() - 1, QSeries(ring));
    for (std::size_t i = 0; i < x.size(); ++i) {
      for (std::size_t j = 0; j < y.size(); ++j) r[i + j] += x[i] * y[j];
    }
    return r;
  };
  auto minus = [&](Poly x, const Poly& y) {
    x.resize(std::max(x.size(), y.size()), QSeries(ring));
    for (std::size_t i = 0; i < y.size(); ++i) x[i] -= y[i];
    return x;
  };
  auto scaled = [&](Poly x, const QSeries& s) {
    for (auto& t : x) t = t * s;
    return x;
  };
  const Poly num = poly(be, al);  // alpha z + beta
  const Poly den = poly(d, c);    // c z + d
  // (gamma z - p)(c z + d) = num - p * den
  auto shifted_num = [&](const QSeries& p) { return minus(num, scaled(den, p)); };
  auto z_minus = [&](const QSeries& p) { return poly(-p, QSeries::constant(ring, 1)); };

  Poly r;
  if (data.attractive && data.repulsive) {
    const auto &a = *data.attractive, &ap = *data.repulsive;
    r = minus(times(shifted_num(a), z_minus(ap)), scaled(times(shifted_num(ap), z_minus(a)), b));
  } else if (data.attractive) {
    const auto& a = *data.attractive;
    r = minus(shifted_num(a), scaled(times(z_minus(a), den), b));
  } else if (data.repulsive) {
    const auto& ap = *data.repulsive;
    r = minus(times(z_minus(ap), den), scaled(shifted_num(ap), b));
  } else {
    throw Error(ErrorKind::precondition, "both fixed points at infinity");
  }
  r.resize(3, QSeries(ring));
  return r;
}

ClosedFiber closed_fiber(const SchottkyContext& ctx, OrientedEdge h) {
  std::map<std::string, Rational> zero;
  for (const auto& v : ctx.ring()->variables()) zero[v] = 0;
  const ProjMat m = phi(ctx, h).substitute(zero);
  ClosedFiber out{};
  for (int i = 0; i < 4; ++i) out.matrix[i] = m.entries()[i].numerator().constant_term();
  const auto& a = out.matrix;
  const bool nonzero = std::any_of(a.begin(), a.end(), [](const Rational& x) { return sgn(x) != 0; });
  out.rank = !nonzero ? 0 : (a[0] * a[3] - a[1] * a[2] == 0 ? 1 : 2);
  if (out.rank == 1) {
    const int col = (sgn(a[0]) != 0 || sgn(a[2]) != 0) ? 0 : 1;
    const Rational x = a[col], y = a[2 + col];
    out.image = sgn(y) == 0 ? AlphaValue{} : AlphaValue{x / y};
  }
  return out;
}

}  // namespace teich::schottky
