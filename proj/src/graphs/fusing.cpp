#include "teich/graphs/fusing.hpp"

#include <algorithm>

#include "teich/error.hpp"

namespace teich::graphs {

namespace {

void reattach(std::vector<Edge>& edges, std::vector<Tail>& tails, const Branch& b, VertexId to) {
  if (b.kind == Branch::Kind::tail) {
    for (auto& t : tails) {
      if (t.id == b.id) t.vertex = to;
    }
    return;
  }
  for (auto& e : edges) {
    if (e.id != b.id) continue;
    if (b.positive) {
      e.target = to;
    } else {
      e.source = to;
    }
  }
}

}  // namespace

std::vector<FusingResult> fusing_rewrite(const StableGraph& graph, EdgeId e, std::optional<EdgeId> new_edge) {
  const Edge* edge = graph.find_edge(e);
  if (!edge) throw Error(ErrorKind::precondition, "edge " + std::to_string(e) + " does not exist");
  if (edge->is_loop()) {
    throw Error(ErrorKind::precondition,
                "edge " + std::to_string(e) + " is a loop; its degenerations are simple moves");
  }
  if (!validate(graph).ok() || !is_trivalent(graph)) {
    throw Error(ErrorKind::precondition, "fusing moves act on stable trivalent graphs");
  }
  const VertexId u = edge->source;
  const VertexId w = edge->target;
  const EdgeId id = new_edge.value_or(graph.max_edge_id() + 1);
  if (id != e && graph.find_edge(id)) {
    throw Error(ErrorKind::precondition, "new edge id " + std::to_string(id) + " is already used");
  }

  auto others = [&](VertexId v, Branch skip) {
    std::vector<Branch> bs;
    for (const auto& b : graph.branches_at(v)) {
      if (b != skip) bs.push_back(b);
    }
    return bs;
  };
  const auto at_u = others(u, Branch::of_edge({e, false}));
  const auto at_w = others(w, Branch::of_edge({e, true}));
  const Branch a = at_u[0], b = at_u[1], c = at_w[0], d = at_w[1];

  std::vector<Edge> base_edges;
  for (const auto& x : graph.edges()) {
    if (x.id != e) base_edges.push_back(x);
  }
  const std::vector<Tail> base_tails = graph.tails();

  // Contraction: everything of w moves to u.
  std::vector<Edge> c_edges = base_edges;
  std::vector<Tail> c_tails = base_tails;
  for (const Branch& x : {c, d}) reattach(c_edges, c_tails, x, u);
  std::vector<VertexId> c_vertices;
  for (VertexId v : graph.vertices()) {
    if (v != w) c_vertices.push_back(v);
  }
  StableGraph contracted(c_vertices, c_edges, c_tails);

  std::vector<FusingResult> out;
  for (const auto& [p, q] : {std::pair{c, d}, std::pair{d, c}}) {
    std::vector<Edge> edges = base_edges;
    std::vector<Tail> tails = base_tails;
    reattach(edges, tails, a, u);
    reattach(edges, tails, p, u);
    reattach(edges, tails, b, w);
    reattach(edges, tails, q, w);
    edges.push_back({id, u, w});
    out.push_back({StableGraph(graph.vertices(), std::move(edges), std::move(tails)), id,
                   {a, p}, {b, q}, contracted});
  }
  return out;
}

}  // namespace teich::graphs
