#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "teich/graphs/stable_graph.hpp"

namespace teich::graphs {

/// Canonical vertex order for isomorphism respecting tail numbering.
/// Edge ids, tail ids and orientations are ignored.
struct CanonicalLabeling {
  std::vector<VertexId> order;  // order[i] is the original vertex placed at position i
  std::string certificate;
};

/// Lexicographically minimal adjacency encoding over all vertex permutations
/// that respect colour-refinement classes. Throws Error(bound_exceeded) when
/// more than `max_permutations` candidates would need checking.
CanonicalLabeling canonical_labeling(const StableGraph& graph,
                                     std::size_t max_permutations = 5'000'000);

std::string canonical_form(const StableGraph& graph);

/// Relabels into the canonical representative: vertices 0..V-1 in canonical
/// order, edges sorted by endpoint positions and oriented low -> high, tail id
/// equal to its number.
StableGraph canonical_graph(const StableGraph& graph);

bool isomorphic(const StableGraph& a, const StableGraph& b);

}  // namespace teich::graphs
