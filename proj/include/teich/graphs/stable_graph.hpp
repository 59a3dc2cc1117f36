#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace teich::graphs {

using VertexId = int;
using EdgeId = int;
using TailId = int;

/// Edge with its persisted orientation: `source` is the tail vertex, `target`
/// the head vertex. Loops have source == target.
struct Edge {
  EdgeId id;
  VertexId source;
  VertexId target;

  bool is_loop() const noexcept { return source == target; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Tail {
  TailId id;
  VertexId vertex;
  std::optional<int> number;

  friend bool operator==(const Tail&, const Tail&) = default;
};

/// Element h of +-E. `positive` selects e (terminal vertex = head) versus -e
/// (terminal vertex = tail vertex).
struct OrientedEdge {
  EdgeId edge;
  bool positive = true;

  OrientedEdge reversed() const noexcept { return {edge, !positive}; }
  friend auto operator<=>(const OrientedEdge&, const OrientedEdge&) = default;
};

/// "+3" / "3" for +e, "-3" for -e.
std::string to_string(OrientedEdge h);
OrientedEdge parse_oriented_edge(const std::string& token);

/// A branch at a vertex: an oriented edge ending there, or a tail.
struct Branch {
  enum class Kind : unsigned char { tail, edge };
  Kind kind;
  int id;
  bool positive = true;

  static Branch of_tail(TailId t) { return {Kind::tail, t, true}; }
  static Branch of_edge(OrientedEdge h) { return {Kind::edge, h.edge, h.positive}; }

  bool is_edge() const noexcept { return kind == Kind::edge; }
  OrientedEdge oriented_edge() const noexcept { return {id, positive}; }
  friend auto operator<=>(const Branch&, const Branch&) = default;
};

std::string to_string(const Branch& b);

/// Graph (V, E, T) with boundary maps, persisted orientation and optional tail
/// numbering. Values are immutable after construction. Construction accepts
/// ill-formed input so that `validate` can report on it.
class StableGraph {
 public:
  StableGraph() = default;
  StableGraph(std::vector<VertexId> vertices, std::vector<Edge> edges, std::vector<Tail> tails);

  const std::vector<VertexId>& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Tail>& tails() const noexcept { return tails_; }

  bool has_vertex(VertexId v) const;
  const Edge* find_edge(EdgeId e) const;
  const Tail* find_tail(TailId t) const;
  const Tail* tail_with_number(int number) const;

  /// Loops count twice, tails once.
  int degree(VertexId v) const;
  /// Branches h with v_h = v: tails first (by number, then id), then oriented
  /// edges by (edge id, + before -).
  std::vector<Branch> branches_at(VertexId v) const;
  std::vector<OrientedEdge> oriented_edges() const;

  /// v_h: head for +e, tail vertex for -e.
  VertexId terminal(OrientedEdge h) const;
  /// v_{-h}.
  VertexId origin(OrientedEdge h) const { return terminal(h.reversed()); }

  bool has_numbering() const;
  VertexId max_vertex_id() const;
  EdgeId max_edge_id() const;
  TailId max_tail_id() const;

  friend bool operator==(const StableGraph&, const StableGraph&) = default;

 private:
  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  std::vector<Tail> tails_;
};

struct Violation {
  enum class Kind { structural, numbering, disconnected, unstable };
  Kind kind;
  std::string message;
  std::optional<VertexId> vertex;
};

std::string to_string(Violation::Kind kind);

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  bool has_structural_errors() const;
};

/// ok iff well-formed, connected and every vertex has degree >= 3.
ValidationReport validate(const StableGraph& graph);

/// Well-formed references and connected geometric realization.
bool is_connected(const StableGraph& graph);

/// rank H_1 = #E - #V + 1. Throws Error(precondition) on disconnected input.
int genus(const StableGraph& graph);
bool is_trivalent(const StableGraph& graph);
/// (genus, #T).
std::pair<int, int> type_of(const StableGraph& graph);

std::vector<EdgeId> loops_of(const StableGraph& graph);

/// Replaces each tail by an edge to a fresh vertex carrying one loop.
StableGraph extend(const StableGraph& graph);

/// Small named graphs used across tests and the CLI.
StableGraph one_vertex_graph(int loops, int tails);
StableGraph theta_graph();
StableGraph four_tail_graph(int a, int b, int c, int d);  // pairing (ab|cd)

}  // namespace teich::graphs
