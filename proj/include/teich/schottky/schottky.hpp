#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "teich/graphs/stable_graph.hpp"
#include "teich/schottky/projmat.hpp"

namespace teich::schottky {

using graphs::EdgeId;
using graphs::OrientedEdge;
using graphs::StableGraph;
using graphs::VertexId;

/// Specialized coordinate alpha_h; nullopt encodes infinity (h in E_inf).
using AlphaValue = std::optional<Rational>;
using AlphaMap = std::map<OrientedEdge, AlphaValue>;

std::string to_string(const AlphaValue& a);
/// Parses "+0=1/2,-0=inf,+1=3".
AlphaMap parse_alpha(const std::string& text);

/// Tail-free connected graph with a specialization of the alpha_h, the ring of
/// q-variables ("q<edge id>") at truncation `order`, and a base vertex.
class SchottkyContext {
 public:
  /// Throws Error(precondition) when the graph has tails or is disconnected, an
  /// oriented edge lacks a value, or the E_inf / distinctness constraints fail.
  SchottkyContext(StableGraph graph, AlphaMap alpha, int order,
                  std::optional<VertexId> base = std::nullopt);

  const StableGraph& graph() const noexcept { return graph_; }
  const AlphaMap& alpha() const noexcept { return alpha_; }
  const AlphaValue& alpha(OrientedEdge h) const;
  const RingPtr& ring() const noexcept { return ring_; }
  int order() const;
  VertexId base_vertex() const noexcept { return base_; }

  static std::string q_name(EdgeId e);
  QSeries q(EdgeId e) const;
  /// Oriented edges with alpha = infinity.
  std::vector<OrientedEdge> infinite_edges() const;

 private:
  StableGraph graph_;
  AlphaMap alpha_;
  RingPtr ring_;
  VertexId base_;
};

/// Distinct random rationals for every oriented edge (E_inf empty).
AlphaMap random_alpha(const StableGraph& graph, std::mt19937_64& rng);
/// tau_v(0) -> 0, tau_v(1) -> 1, tau_v(inf) -> infinity for edge branches
/// chosen by the rigidification; remaining branches get distinct rationals
/// outside {0, 1}.
AlphaMap alpha_from_rigidification(const StableGraph& graph, std::mt19937_64& rng);

/// Generator matrix phi_h with det = q_|h|. Finite alphas use the displayed
/// form scaled by 1/(alpha_h - alpha_-h); alpha_-h = inf gives
/// [[q, alpha_h (1 - q)], [0, 1]] and alpha_h = inf gives [[1, -alpha_-h (1 - q)], [0, q]].
/// phi(-h) is the adjugate of phi(h).
ProjMat phi(const SchottkyContext& ctx, OrientedEdge h);

using EdgePath = std::vector<OrientedEdge>;

EdgePath parse_path(const std::string& text);
std::string to_string(const EdgePath& path);

/// Throws Error(not_composable) (index of the offending step) unless
/// v_{h(i)} = v_{-h(i+1)} and h(i) != -h(i+1).
void check_reduced_path(const StableGraph& graph, const EdgePath& path);
bool is_closed(const StableGraph& graph, const EdgePath& path);
bool is_cyclically_reduced(const EdgePath& path);

/// rho* = phi_{h(l)} ... phi_{h(1)}; identity for the empty path.
ProjMat word_to_element(const SchottkyContext& ctx, const EdgePath& path);

/// One loop at the base vertex per edge outside a BFS spanning tree.
std::vector<EdgePath> free_generators(const SchottkyContext& ctx);

/// nullopt encodes the fixed point at infinity.
using SeriesPoint = std::optional<QSeries>;

struct FixedPointData {
  SeriesPoint attractive;
  SeriesPoint repulsive;
  QSeries multiplier;
};

/// Fixed points of gamma = [[al, be], [c, d]] (series entries) with the given
/// values at q = 0, and the multiplier b = (c a' + d) / (c a + d). A point at
/// infinity requires c = 0 exactly. Throws Error(degenerate) for a repeated
/// root at q = 0.
FixedPointData fixed_point_data(const ProjMat& gamma, const AlphaValue& attractive0,
                                const AlphaValue& repulsive0);
/// For a closed, cyclically reduced nonempty path: a = alpha_{h(l)} and
/// a' = alpha_{-h(1)} mod (q).
FixedPointData fixed_point_data(const SchottkyContext& ctx, const EdgePath& path);

/// Coefficients (in z^0, z^1, z^2) of the cross-ratio relation
/// (gamma z - a)(z - a') - b (gamma z - a')(z - a), multiplied by (c z + d);
/// with limits taken when a or a' is infinite. Zero iff the relation holds.
std::vector<QSeries> cross_ratio_residual(const ProjMat& gamma, const FixedPointData& data);

/// phi_h at q = 0: a rational rank-1 matrix.
struct ClosedFiber {
  std::array<Rational, 4> matrix;
  int rank;
  AlphaValue image;  // column space as a point of P^1 (rank 1 only)
};
ClosedFiber closed_fiber(const SchottkyContext& ctx, OrientedEdge h);

}  // namespace teich::schottky
