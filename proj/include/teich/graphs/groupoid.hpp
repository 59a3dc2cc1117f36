#pragma once

#include <string>
#include <vector>

#include "teich/graphs/stable_graph.hpp"

namespace teich::graphs {

/// Basic move of the Teichmueller groupoid between trivalent graphs.
struct Move {
  enum class Kind { half_dehn, fusing, simple };

  Kind kind;
  EdgeId edge;
  EdgeId target_edge = -1;  // fusing only: id given to the new edge
  int branch = 0;           // fusing only: which of the two re-expansions

  static Move half_dehn(EdgeId e) { return {Kind::half_dehn, e}; }
  static Move fusing(EdgeId e, EdgeId target, int branch = 0) { return {Kind::fusing, e, target, branch}; }
  static Move simple(EdgeId loop) { return {Kind::simple, loop}; }

  friend bool operator==(const Move&, const Move&) = default;
};

std::string to_string(Move::Kind kind);
std::string to_string(const Move& move);

/// Target graph of a move; throws Error(precondition) when it does not apply.
StableGraph apply_move(const StableGraph& source, const Move& move);

/// Composable sequence of moves from a trivalent basepoint.
class GroupoidWord {
 public:
  explicit GroupoidWord(StableGraph basepoint);

  const StableGraph& basepoint() const noexcept { return basepoint_; }
  const std::vector<Move>& moves() const noexcept { return moves_; }
  std::size_t size() const noexcept { return moves_.size(); }
  bool empty() const noexcept { return moves_.empty(); }

  const StableGraph& source(std::size_t i) const;
  const StableGraph& target(std::size_t i) const;
  /// Endpoint of the whole word (the basepoint for the empty word).
  const StableGraph& end() const;

  /// Appends a move starting at end(); throws Error(not_composable) with the
  /// index the move would occupy.
  void push_back(const Move& move);

 private:
  StableGraph basepoint_;
  std::vector<Move> moves_;
  std::vector<StableGraph> endpoints_;
};

GroupoidWord compose_word(const StableGraph& basepoint, const std::vector<Move>& moves);

/// Move with explicitly recorded endpoints, as read from files.
struct Step {
  Move move;
  StableGraph source;
  StableGraph target;
};

/// Checks target_i == source_{i+1} and that each recorded target is what the
/// move produces; the first offending index is reported.
GroupoidWord compose_steps(const std::vector<Step>& steps);

}  // namespace teich::graphs
