#include "teich/graphs/rigidification.hpp"

#include <algorithm>
#include <set>

#include "teich/error.hpp"

namespace teich::graphs {

namespace {

// tau_v(a) != -tau_{v'}(a) for distinct vertices when both are edges.
bool clashes(const Branch& b, Marker a, VertexId v,
             const std::map<VertexId, std::array<Branch, 3>>& assigned) {
  if (!b.is_edge()) return false;
  const Branch opposite = Branch::of_edge(b.oriented_edge().reversed());
  for (const auto& [w, images] : assigned) {
    if (w != v && images[static_cast<int>(a)] == opposite) return true;
  }
  return false;
}

}  // namespace

std::vector<std::string> rigidification_violations(const StableGraph& graph,
                                                   const Rigidification& tau) {
  std::vector<std::string> out;
  for (VertexId v : graph.vertices()) {
    auto it = tau.tau.find(v);
    if (it == tau.tau.end()) {
      out.push_back("vertex " + std::to_string(v) + " has no tau");
      continue;
    }
    const auto branches = graph.branches_at(v);
    std::set<Branch> seen;
    for (const Branch& b : it->second) {
      if (std::find(branches.begin(), branches.end(), b) == branches.end()) {
        out.push_back("branch " + to_string(b) + " is not incident at vertex " + std::to_string(v));
      }
      if (!seen.insert(b).second) {
        out.push_back("tau at vertex " + std::to_string(v) + " is not injective");
      }
    }
  }
  for (const auto& [v, images] : tau.tau) {
    if (!graph.has_vertex(v)) out.push_back("tau given for unknown vertex " + std::to_string(v));
  }
  for (Marker a : kMarkers) {
    for (const auto& [v, images] : tau.tau) {
      if (clashes(images[static_cast<int>(a)], a, v, tau.tau)) {
        out.push_back("tau_v(a) = -tau_w(a) at vertex " + std::to_string(v));
      }
    }
  }
  return out;
}

Rigidification find_rigidification(const StableGraph& graph) {
  auto report = validate(graph);
  if (!report.ok()) {
    throw Error(ErrorKind::precondition, "rigidification needs a stable graph: " +
                                             report.violations.front().message);
  }
  if (!graph.tails().empty() && !graph.has_numbering()) {
    throw Error(ErrorKind::precondition, "rigidification needs a tail numbering");
  }
  const auto& vertices = graph.vertices();
  std::vector<std::vector<Branch>> branches;
  for (VertexId v : vertices) branches.push_back(graph.branches_at(v));

  std::map<VertexId, std::array<Branch, 3>> assigned;
  auto search = [&](auto&& self, std::size_t k) -> bool {
    if (k == vertices.size()) return true;
    const VertexId v = vertices[k];
    const auto& bs = branches[k];
    const std::size_t d = bs.size();
    for (std::size_t i = 0; i < d; ++i) {
      if (clashes(bs[i], Marker::zero, v, assigned)) continue;
      for (std::size_t j = 0; j < d; ++j) {
        if (j == i || clashes(bs[j], Marker::one, v, assigned)) continue;
        for (std::size_t l = 0; l < d; ++l) {
          if (l == i || l == j || clashes(bs[l], Marker::infinity, v, assigned)) continue;
          assigned[v] = {bs[i], bs[j], bs[l]};
          if (self(self, k + 1)) return true;
          assigned.erase(v);
        }
      }
    }
    return false;
  };
  if (!search(search, 0)) {
    throw Error(ErrorKind::numeric, "no rigidification found by exhaustive search");
  }
  return Rigidification{std::move(assigned)};
}

CoordinateSystem coordinate_system(const StableGraph& graph, const Rigidification& tau) {
  auto problems = rigidification_violations(graph, tau);
  if (!problems.empty()) throw Error(ErrorKind::precondition, "invalid rigidification: " + problems.front());
  CoordinateSystem cs;
  for (const auto& [v, images] : tau.tau) {
    for (Marker a : kMarkers) cs.fixed[images[static_cast<int>(a)]] = a;
  }
  std::vector<Branch> all;
  for (const auto& t : graph.tails()) all.push_back(Branch::of_tail(t.id));
  for (const auto& h : graph.oriented_edges()) all.push_back(Branch::of_edge(h));
  std::sort(all.begin(), all.end());
  for (const auto& b : all) {
    if (!cs.fixed.count(b)) cs.alpha_variables.push_back(b);
  }
  for (const auto& e : graph.edges()) cs.q_variables.push_back(e.id);
  return cs;
}

}  // namespace teich::graphs
