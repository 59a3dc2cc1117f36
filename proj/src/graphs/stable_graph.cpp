#include "teich/graphs/stable_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "teich/error.hpp"

namespace teich::graphs {

std::string to_string(OrientedEdge h) {
  return (h.positive ? "+" : "-") + std::to_string(h.edge);
}

OrientedEdge parse_oriented_edge(const std::string& token) {
  if (token.empty()) throw Error(ErrorKind::parse, "empty oriented-edge token");
  bool positive = true;
  std::size_t start = 0;
  if (token[0] == '+' || token[0] == '-') {
    positive = token[0] == '+';
    start = 1;
  }
  try {
    std::size_t used = 0;
    int id = std::stoi(token.substr(start), &used);
    if (used != token.size() - start) throw std::invalid_argument(token);
    return {id, positive};
  } catch (const std::exception&) {
    throw Error(ErrorKind::parse, "not an oriented edge: '" + token + "'");
  }
}

std::string to_string(const Branch& b) {
  if (b.kind == Branch::Kind::tail) return "t" + std::to_string(b.id);
  return to_string(b.oriented_edge());
}

StableGraph::StableGraph(std::vector<VertexId> vertices, std::vector<Edge> edges,
                         std::vector<Tail> tails)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), tails_(std::move(tails)) {
  std::sort(vertices_.begin(), vertices_.end());
  std::stable_sort(edges_.begin(), edges_.end(),
                   [](const Edge& a, const Edge& b) { return a.id < b.id; });
  std::stable_sort(tails_.begin(), tails_.end(),
                   [](const Tail& a, const Tail& b) { return a.id < b.id; });
}

bool StableGraph::has_vertex(VertexId v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

const Edge* StableGraph::find_edge(EdgeId e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e,
                             [](const Edge& a, EdgeId id) { return a.id < id; });
  return (it != edges_.end() && it->id == e) ? &*it : nullptr;
}

const Tail* StableGraph::find_tail(TailId t) const {
  auto it = std::lower_bound(tails_.begin(), tails_.end(), t,
                             [](const Tail& a, TailId id) { return a.id < id; });
  return (it != tails_.end() && it->id == t) ? &*it : nullptr;
}

const Tail* StableGraph::tail_with_number(int number) const {
  for (const auto& t : tails_) {
    if (t.number == number) return &t;
  }
  return nullptr;
}

int StableGraph::degree(VertexId v) const {
  int d = 0;
  for (const auto& e : edges_) d += (e.source == v) + (e.target == v);
  for (const auto& t : tails_) d += (t.vertex == v);
  return d;
}

std::vector<Branch> StableGraph::branches_at(VertexId v) const {
  std::vector<const Tail*> ts;
  for (const auto& t : tails_) {
    if (t.vertex == v) ts.push_back(&t);
  }
  std::sort(ts.begin(), ts.end(), [](const Tail* a, const Tail* b) {
    const int na = a->number.value_or(0);
    const int nb = b->number.value_or(0);
    return std::tie(na, a->id) < std::tie(nb, b->id);
  });
  std::vector<Branch> out;
  for (const Tail* t : ts) out.push_back(Branch::of_tail(t->id));
  for (const auto& e : edges_) {
    if (e.target == v) out.push_back(Branch::of_edge({e.id, true}));
    if (e.source == v) out.push_back(Branch::of_edge({e.id, false}));
  }
  return out;
}

std::vector<OrientedEdge> StableGraph::oriented_edges() const {
  std::vector<OrientedEdge> out;
  for (const auto& e : edges_) {
    out.push_back({e.id, true});
    out.push_back({e.id, false});
  }
  return out;
}

VertexId StableGraph::terminal(OrientedEdge h) const {
  const Edge* e = find_edge(h.edge);
  if (!e) throw Error(ErrorKind::precondition, "unknown edge " + std::to_string(h.edge));
  return h.positive ? e->target : e->source;
}

bool StableGraph::has_numbering() const {
  return !tails_.empty() &&
         std::all_of(tails_.begin(), tails_.end(), [](const Tail& t) { return t.number.has_value(); });
}

VertexId StableGraph::max_vertex_id() const { return vertices_.empty() ? -1 : vertices_.back(); }
EdgeId StableGraph::max_edge_id() const { return edges_.empty() ? -1 : edges_.back().id; }
TailId StableGraph::max_tail_id() const { return tails_.empty() ? -1 : tails_.back().id; }

std::string to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::structural: return "structural";
    case Violation::Kind::numbering: return "numbering";
    case Violation::Kind::disconnected: return "disconnected";
    case Violation::Kind::unstable: return "unstable";
  }
  return "unknown";
}

bool ValidationReport::has_structural_errors() const {
  return std::any_of(violations.begin(), violations.end(), [](const Violation& v) {
    return v.kind == Violation::Kind::structural;
  });
}

namespace {

std::vector<Violation> structural_violations(const StableGraph& g) {
  std::vector<Violation> out;
  auto dup = [](auto ids) {
    std::sort(ids.begin(), ids.end());
    return std::adjacent_find(ids.begin(), ids.end()) != ids.end();
  };
  if (dup(g.vertices())) out.push_back({Violation::Kind::structural, "duplicate vertex id", {}});
  std::vector<EdgeId> eids;
  for (const auto& e : g.edges()) eids.push_back(e.id);
  if (dup(eids)) out.push_back({Violation::Kind::structural, "duplicate edge id", {}});
  std::vector<TailId> tids;
  for (const auto& t : g.tails()) tids.push_back(t.id);
  if (dup(tids)) out.push_back({Violation::Kind::structural, "duplicate tail id", {}});
  for (const auto& e : g.edges()) {
    for (VertexId v : {e.source, e.target}) {
      if (!g.has_vertex(v)) {
        out.push_back({Violation::Kind::structural,
                       "edge " + std::to_string(e.id) + " references missing vertex " +
                           std::to_string(v),
                       v});
      }
    }
  }
  for (const auto& t : g.tails()) {
    if (!g.has_vertex(t.vertex)) {
      out.push_back({Violation::Kind::structural,
                     "tail " + std::to_string(t.id) + " references missing vertex " +
                         std::to_string(t.vertex),
                     t.vertex});
    }
  }
  return out;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

bool connected_unchecked(const StableGraph& g) {
  const auto& vs = g.vertices();
  if (vs.empty()) return false;
  auto index = [&](VertexId v) {
    return static_cast<int>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
  };
  UnionFind uf(vs.size());
  for (const auto& e : g.edges()) uf.unite(index(e.source), index(e.target));
  const int root = uf.find(0);
  for (std::size_t i = 1; i < vs.size(); ++i) {
    if (uf.find(static_cast<int>(i)) != root) return false;
  }
  return true;
}

void require_well_formed(const StableGraph& g) {
  auto s = structural_violations(g);
  if (!s.empty()) throw Error(ErrorKind::structural, s.front().message);
}

}  // namespace

ValidationReport validate(const StableGraph& graph) {
  ValidationReport report;
  report.violations = structural_violations(graph);
  if (!report.violations.empty()) return report;

  const bool any_numbered = std::any_of(graph.tails().begin(), graph.tails().end(),
                                        [](const Tail& t) { return t.number.has_value(); });
  if (any_numbered) {
    std::vector<int> nums;
    for (const auto& t : graph.tails()) {
      if (!t.number) {
        report.violations.push_back({Violation::Kind::numbering,
                                     "tail " + std::to_string(t.id) + " has no number", {}});
      } else {
        nums.push_back(*t.number);
      }
    }
    std::sort(nums.begin(), nums.end());
    for (std::size_t i = 0; i < nums.size(); ++i) {
      if (nums[i] != static_cast<int>(i) + 1) {
        report.violations.push_back(
            {Violation::Kind::numbering, "tail numbering is not a bijection onto {1..#T}", {}});
        break;
      }
    }
  }
  if (!connected_unchecked(graph)) {
    report.violations.push_back({Violation::Kind::disconnected,
                                 graph.vertices().empty() ? "graph has no vertices"
                                                          : "geometric realization is disconnected",
                                 {}});
  }
  for (VertexId v : graph.vertices()) {
    const int d = graph.degree(v);
    if (d < 3) {
      report.violations.push_back({Violation::Kind::unstable,
                                   "vertex " + std::to_string(v) + " has degree " +
                                       std::to_string(d),
                                   v});
    }
  }
  return report;
}

bool is_connected(const StableGraph& graph) {
  return structural_violations(graph).empty() && connected_unchecked(graph);
}

int genus(const StableGraph& graph) {
  require_well_formed(graph);
  if (!connected_unchecked(graph)) throw Error(ErrorKind::precondition, "genus of a disconnected graph");
  return static_cast<int>(graph.edges().size()) - static_cast<int>(graph.vertices().size()) + 1;
}

bool is_trivalent(const StableGraph& graph) {
  return std::all_of(graph.vertices().begin(), graph.vertices().end(),
                     [&](VertexId v) { return graph.degree(v) == 3; });
}

std::pair<int, int> type_of(const StableGraph& graph) {
  return {genus(graph), static_cast<int>(graph.tails().size())};
}

std::vector<EdgeId> loops_of(const StableGraph& graph) {
  std::vector<EdgeId> out;
  for (const auto& e : graph.edges()) {
    if (e.is_loop()) out.push_back(e.id);
  }
  return out;
}

StableGraph extend(const StableGraph& graph) {
  require_well_formed(graph);
  std::vector<VertexId> vertices = graph.vertices();
  std::vector<Edge> edges = graph.edges();
  VertexId next_vertex = graph.max_vertex_id() + 1;
  EdgeId next_edge = graph.max_edge_id() + 1;

  std::vector<Tail> ordered = graph.tails();
  std::stable_sort(ordered.begin(), ordered.end(), [](const Tail& a, const Tail& b) {
    return std::tie(a.number, a.id) < std::tie(b.number, b.id);
  });
  for (const auto& t : ordered) {
    const VertexId w = next_vertex++;
    vertices.push_back(w);
    edges.push_back({next_edge++, t.vertex, w});
    edges.push_back({next_edge++, w, w});
  }
  return StableGraph(std::move(vertices), std::move(edges), {});
}

StableGraph one_vertex_graph(int loops, int tails) {
  std::vector<Edge> edges;
  for (int i = 0; i < loops; ++i) edges.push_back({i, 0, 0});
  std::vector<Tail> ts;
  for (int i = 0; i < tails; ++i) ts.push_back({i + 1, 0, i + 1});
  return StableGraph({0}, std::move(edges), std::move(ts));
}

StableGraph theta_graph() {
  return StableGraph({0, 1}, {{0, 0, 1}, {1, 0, 1}, {2, 0, 1}}, {});
}

StableGraph four_tail_graph(int a, int b, int c, int d) {
  return StableGraph({0, 1}, {{0, 0, 1}},
                     {{a, 0, a}, {b, 0, b}, {c, 1, c}, {d, 1, d}});
}

}  // namespace teich::graphs
