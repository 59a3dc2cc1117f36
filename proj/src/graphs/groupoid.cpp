#include "teich/graphs/groupoid.hpp"

#include "teich/error.hpp"
#include "teich/graphs/fusing.hpp"

namespace teich::graphs {

std::string to_string(Move::Kind kind) {
  switch (kind) {
    case Move::Kind::half_dehn: return "half_dehn";
    case Move::Kind::fusing: return "fusing";
    case Move::Kind::simple: return "simple";
  }
  return "unknown";
}

std::string to_string(const Move& move) {
  switch (move.kind) {
    case Move::Kind::half_dehn: return "HalfDehn(" + std::to_string(move.edge) + ")";
    case Move::Kind::fusing:
      return "Fusing(" + std::to_string(move.edge) + "," + std::to_string(move.target_edge) + ")";
    case Move::Kind::simple: return "Simple(" + std::to_string(move.edge) + ")";
  }
  return "?";
}

StableGraph apply_move(const StableGraph& source, const Move& move) {
  const Edge* e = source.find_edge(move.edge);
  if (!e) throw Error(ErrorKind::precondition, "edge " + std::to_string(move.edge) + " does not exist");
  switch (move.kind) {
    case Move::Kind::half_dehn:
      return source;
    case Move::Kind::simple:
      if (!e->is_loop()) {
        throw Error(ErrorKind::precondition, "simple move needs a loop, edge " +
                                                 std::to_string(move.edge) + " is not one");
      }
      return source;
    case Move::Kind::fusing: {
      if (move.branch != 0 && move.branch != 1) {
        throw Error(ErrorKind::precondition, "fusing branch must be 0 or 1");
      }
      auto results = fusing_rewrite(source, move.edge, move.target_edge);
      return results[static_cast<std::size_t>(move.branch)].graph;
    }
  }
  throw Error(ErrorKind::precondition, "unknown move kind");
}

GroupoidWord::GroupoidWord(StableGraph basepoint) : basepoint_(std::move(basepoint)) {
  if (!validate(basepoint_).ok() || !is_trivalent(basepoint_)) {
    throw Error(ErrorKind::precondition, "groupoid basepoint must be a stable trivalent graph");
  }
}

const StableGraph& GroupoidWord::source(std::size_t i) const {
  return i == 0 ? basepoint_ : endpoints_.at(i - 1);
}

const StableGraph& GroupoidWord::target(std::size_t i) const { return endpoints_.at(i); }

const StableGraph& GroupoidWord::end() const {
  return endpoints_.empty() ? basepoint_ : endpoints_.back();
}

void GroupoidWord::push_back(const Move& move) {
  StableGraph next;
  try {
    next = apply_move(end(), move);
  } catch (const Error& err) {
    throw Error(ErrorKind::not_composable,
                "move " + std::to_string(moves_.size()) + " (" + to_string(move) + "): " + err.what(),
                moves_.size());
  }
  moves_.push_back(move);
  endpoints_.push_back(std::move(next));
}

GroupoidWord compose_word(const StableGraph& basepoint, const std::vector<Move>& moves) {
  GroupoidWord word(basepoint);
  for (const auto& m : moves) word.push_back(m);
  return word;
}

GroupoidWord compose_steps(const std::vector<Step>& steps) {
  if (steps.empty()) throw Error(ErrorKind::precondition, "an empty step list has no basepoint");
  GroupoidWord word(steps.front().source);
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (!(steps[i].source == word.end())) {
      throw Error(ErrorKind::not_composable,
                  "step " + std::to_string(i) + " does not start where step " +
                      std::to_string(i == 0 ? 0 : i - 1) + " ends",
                  i);
    }
    word.push_back(steps[i].move);
    if (!(word.end() == steps[i].target)) {
      throw Error(ErrorKind::not_composable,
                  "step " + std::to_string(i) + " records a target the move does not produce", i);
    }
  }
  return word;
}

}  // namespace teich::graphs
