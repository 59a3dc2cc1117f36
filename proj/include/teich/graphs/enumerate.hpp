#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "teich/graphs/stable_graph.hpp"

namespace teich::graphs {

struct EnumeratedGraph {
  StableGraph graph;        // canonical representative
  std::string certificate;  // canonical form
};

struct EnumerationOptions {
  int bound = 6;  // largest admissible 2g - 2 + n
  /// When set, results are read from / written to <dir>/trivalent_<g>_<n>.json.
  std::optional<std::filesystem::path> cache_dir;
};

/// All trivalent graphs of type (g, n) with numbered tails, one per
/// isomorphism class, sorted by certificate.
///
/// Built recursively: (0,3) and (1,1) are seeds, tail n is attached to every
/// edge or tail of each (g, n-1) graph, and tail-free (g, 0) graphs come from
/// gluing tails 1 and 2 of each (g-1, 2) graph. Throws Error(bound_exceeded)
/// when 2g - 2 + n exceeds `options.bound`, Error(precondition) for unstable types.
std::vector<EnumeratedGraph> enumerate_trivalent(int g, int n, const EnumerationOptions& options = {});

}  // namespace teich::graphs
