#pragma once

#include <array>
#include <optional>
#include <vector>

#include "teich/graphs/stable_graph.hpp"

namespace teich::graphs {

/// One re-expansion of the 4-valent vertex obtained by contracting an edge.
struct FusingResult {
  StableGraph graph;
  EdgeId new_edge;
  /// Branches placed at the source / target vertex of the new edge.
  std::array<Branch, 2> at_source;
  std::array<Branch, 2> at_target;
  /// The common contraction with both edges shrunk to a point.
  StableGraph contracted;
};

/// Contract a non-loop edge e = (u -> w) of a trivalent graph. With a, b the
/// other branches at u and c, d those at w (in `branches_at` order), returns
/// the pairings (a c | b d) and (a d | b c), each with a new edge u -> w.
/// The new edge gets `new_edge` or, by default, max edge id + 1.
/// Loop edges are rejected with Error(precondition).
std::vector<FusingResult> fusing_rewrite(const StableGraph& graph, EdgeId e,
                                         std::optional<EdgeId> new_edge = std::nullopt);

}  // namespace teich::graphs
