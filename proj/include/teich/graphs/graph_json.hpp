#pragma once

#include <json.hpp>

#include "teich/graphs/groupoid.hpp"
#include "teich/graphs/rigidification.hpp"
#include "teich/graphs/stable_graph.hpp"

namespace teich::graphs {

/// {"vertices": [ids], "edges": [{"id", "ends": [v] | [v, w]}],
///  "tails": [{"id", "end": v, "num": k}], "orientation": {"<edge>": [tail, head]}}
nlohmann::json to_json(const StableGraph& graph);
/// Accepts the schema above; missing orientation defaults to the `ends` order.
/// Throws Error(parse) on schema violations. Dangling references are kept so
/// that `validate` can report them.
StableGraph graph_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Rigidification& tau);
nlohmann::json to_json(const Move& move);
Move move_from_json(const nlohmann::json& j);

/// {"basepoint": graph, "moves": [...]} or {"steps": [{"move", "source", "target"}]}.
nlohmann::json to_json(const GroupoidWord& word);
GroupoidWord word_from_json(const nlohmann::json& j);

}  // namespace teich::graphs
