#include "teich/graphs/graph_json.hpp"

#include "teich/error.hpp"

namespace teich::graphs {

using nlohmann::json;

namespace {

int as_id(const json& j, const char* what) {
  if (j.is_number_integer()) return j.get<int>();
  if (j.is_string()) {
    try {
      std::size_t used = 0;
      const auto s = j.get<std::string>();
      int v = std::stoi(s, &used);
      if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
  }
  throw Error(ErrorKind::parse, std::string("expected integer id for ") + what + ", got " + j.dump());
}

json branch_json(const Branch& b) {
  if (b.kind == Branch::Kind::tail) return {{"tail", b.id}};
  return {{"edge", b.id}, {"sign", b.positive ? "+" : "-"}};
}

}  // namespace

json to_json(const StableGraph& graph) {
  json j;
  j["vertices"] = graph.vertices();
  j["edges"] = json::array();
  j["orientation"] = json::object();
  for (const auto& e : graph.edges()) {
    json ends = e.is_loop() ? json::array({e.source}) : json::array({e.source, e.target});
    j["edges"].push_back({{"id", e.id}, {"ends", ends}});
    j["orientation"][std::to_string(e.id)] = {e.source, e.target};
  }
  j["tails"] = json::array();
  for (const auto& t : graph.tails()) {
    json tj = {{"id", t.id}, {"end", t.vertex}};
    if (t.number) tj["num"] = *t.number;
    j["tails"].push_back(tj);
  }
  return j;
}

StableGraph graph_from_json(const json& j) {
  try {
    if (!j.is_object()) throw Error(ErrorKind::parse, "graph must be a JSON object");
    std::vector<VertexId> vertices;
    for (const auto& v : j.at("vertices")) vertices.push_back(as_id(v, "vertex"));
    std::vector<Edge> edges;
    if (j.contains("edges")) {
      for (const auto& ej : j.at("edges")) {
        const int id = as_id(ej.at("id"), "edge");
        const auto& ends = ej.at("ends");
        if (!ends.is_array() || ends.empty() || ends.size() > 2) {
          throw Error(ErrorKind::parse, "edge " + std::to_string(id) + ": ends must be [v] or [v, w]");
        }
        const VertexId a = as_id(ends[0], "edge end");
        const VertexId b = ends.size() == 2 ? as_id(ends[1], "edge end") : a;
        Edge e{id, a, b};
        if (j.contains("orientation") && j["orientation"].contains(std::to_string(id))) {
          const auto& o = j["orientation"][std::to_string(id)];
          const VertexId s = as_id(o.at(0), "orientation");
          const VertexId t = as_id(o.at(1), "orientation");
          if (!((s == a && t == b) || (s == b && t == a))) {
            throw Error(ErrorKind::parse, "orientation of edge " + std::to_string(id) +
                                              " does not match its ends");
          }
          e.source = s;
          e.target = t;
        }
        edges.push_back(e);
      }
    }
    std::vector<Tail> tails;
    if (j.contains("tails")) {
      for (const auto& tj : j.at("tails")) {
        Tail t{as_id(tj.at("id"), "tail"), as_id(tj.at("end"), "tail end"), std::nullopt};
        if (tj.contains("num") && !tj["num"].is_null()) t.number = as_id(tj["num"], "tail number");
        tails.push_back(t);
      }
    }
    return StableGraph(std::move(vertices), std::move(edges), std::move(tails));
  } catch (const json::exception& e) {
    throw Error(ErrorKind::parse, std::string("graph JSON: ") + e.what());
  }
}

json to_json(const Rigidification& tau) {
  json j = json::object();
  for (const auto& [v, images] : tau.tau) {
    j[std::to_string(v)] = {{"0", branch_json(images[0])},
                            {"1", branch_json(images[1])},
                            {"inf", branch_json(images[2])}};
  }
  return j;
}

json to_json(const Move& move) {
  json j = {{"type", to_string(move.kind)}, {"edge", move.edge}};
  if (move.kind == Move::Kind::fusing) {
    j["target"] = move.target_edge;
    j["branch"] = move.branch;
  }
  return j;
}

Move move_from_json(const json& j) {
  try {
    const auto type = j.at("type").get<std::string>();
    const EdgeId e = as_id(j.at("edge"), "move edge");
    if (type == "half_dehn") return Move::half_dehn(e);
    if (type == "simple") return Move::simple(e);
    if (type == "fusing") {
      return Move::fusing(e, as_id(j.at("target"), "fusing target"), j.value("branch", 0));
    }
    throw Error(ErrorKind::parse, "unknown move type '" + type + "'");
  } catch (const json::exception& e) {
    throw Error(ErrorKind::parse, std::string("move JSON: ") + e.what());
  }
}

json to_json(const GroupoidWord& word) {
  json j;
  j["basepoint"] = to_json(word.basepoint());
  j["moves"] = json::array();
  j["endpoints"] = json::array();
  for (std::size_t i = 0; i < word.size(); ++i) {
    j["moves"].push_back(to_json(word.moves()[i]));
    j["endpoints"].push_back(to_json(word.target(i)));
  }
  return j;
}

GroupoidWord word_from_json(const json& j) {
  try {
    if (j.contains("steps")) {
      std::vector<Step> steps;
      for (const auto& s : j.at("steps")) {
        steps.push_back({move_from_json(s.at("move")), graph_from_json(s.at("source")),
                         graph_from_json(s.at("target"))});
      }
      return compose_steps(steps);
    }
    std::vector<Move> moves;
    for (const auto& m : j.value("moves", json::array())) moves.push_back(move_from_json(m));
    return compose_word(graph_from_json(j.at("basepoint")), moves);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::parse, std::string("word JSON: ") + e.what());
  }
}

}  // namespace teich::graphs
