#pragma once

#include <array>
#include <map>
#include <vector>

#include "teich/graphs/stable_graph.hpp"

namespace teich::graphs {

/// Marked points of the coordinate line at each vertex.
enum class Marker : unsigned char { zero = 0, one = 1, infinity = 2 };

inline constexpr std::array<Marker, 3> kMarkers{Marker::zero, Marker::one, Marker::infinity};

/// Per-vertex injections {0, 1, inf} -> branches at that vertex.
struct Rigidification {
  std::map<VertexId, std::array<Branch, 3>> tau;

  const Branch& at(VertexId v, Marker a) const { return tau.at(v)[static_cast<int>(a)]; }
  friend bool operator==(const Rigidification&, const Rigidification&) = default;
};

/// Empty when valid, otherwise human-readable reasons.
std::vector<std::string> rigidification_violations(const StableGraph& graph,
                                                   const Rigidification& tau);

/// Deterministic backtracking over branches in `branches_at` order, vertices by
/// id; the first solution is returned. Requires a stable graph with numbering
/// (or no tails). Throws Error(numeric) if the search is exhausted.
Rigidification find_rigidification(const StableGraph& graph);

/// Formal coordinates attached to (graph, tau).
struct CoordinateSystem {
  std::vector<Branch> alpha_variables;  // E_tau = (+-E u T) minus the images of tau
  std::vector<EdgeId> q_variables;      // one per edge
  /// Fixed values: tau_v(0) -> 0, tau_v(1) -> 1, tau_v(inf) -> infinity.
  std::map<Branch, Marker> fixed;

  std::size_t dimension() const { return alpha_variables.size() + q_variables.size(); }
};

/// Throws Error(precondition) for an invalid tau.
CoordinateSystem coordinate_system(const StableGraph& graph, const Rigidification& tau);

}  // namespace teich::graphs
