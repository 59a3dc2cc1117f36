#include "teich/graphs/enumerate.hpp"

#include <algorithm>
#include <fstream>
#include <map>

#include "teich/error.hpp"
#include "teich/graphs/canonical.hpp"
#include "teich/graphs/graph_json.hpp"

namespace teich::graphs {

namespace {

using Catalog = std::map<std::string, StableGraph>;

void insert_canonical(Catalog& out, const StableGraph& g) {
  auto lab = canonical_labeling(g);
  if (!out.count(lab.certificate)) out.emplace(lab.certificate, canonical_graph(g));
}

// Every way of attaching a new tail with the given number: subdivide an edge
// or a tail with a fresh trivalent vertex.
std::vector<StableGraph> attach_tail(const StableGraph& g, int number) {
  std::vector<StableGraph> out;
  const VertexId x = g.max_vertex_id() + 1;
  const EdgeId fresh = g.max_edge_id() + 1;
  std::vector<VertexId> vertices = g.vertices();
  vertices.push_back(x);
  const Tail added{number, x, number};

  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    std::vector<Edge> edges = g.edges();
    const Edge e = edges[i];
    edges[i] = {e.id, e.source, x};
    edges.push_back({fresh, x, e.target});
    std::vector<Tail> tails = g.tails();
    tails.push_back(added);
    out.emplace_back(vertices, std::move(edges), std::move(tails));
  }
  for (std::size_t i = 0; i < g.tails().size(); ++i) {
    std::vector<Edge> edges = g.edges();
    std::vector<Tail> tails = g.tails();
    edges.push_back({fresh, tails[i].vertex, x});
    tails[i].vertex = x;
    tails.push_back(added);
    out.emplace_back(vertices, std::move(edges), std::move(tails));
  }
  return out;
}

StableGraph glue_first_two_tails(const StableGraph& g) {
  const Tail* t1 = g.tail_with_number(1);
  const Tail* t2 = g.tail_with_number(2);
  std::vector<Edge> edges = g.edges();
  edges.push_back({g.max_edge_id() + 1, t1->vertex, t2->vertex});
  return StableGraph(g.vertices(), std::move(edges), {});
}

class Enumerator {
 public:
  explicit Enumerator(const EnumerationOptions& options) : options_(options) {}

  const Catalog& get(int g, int n) {
    auto key = std::make_pair(g, n);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Catalog result;
    if (!load_cache(g, n, result)) {
      result = build(g, n);
      store_cache(g, n, result);
    }
    return memo_.emplace(key, std::move(result)).first->second;
  }

 private:
  Catalog build(int g, int n) {
    Catalog out;
    if (g == 0 && n == 3) {
      insert_canonical(out, one_vertex_graph(0, 3));
    } else if (g == 1 && n == 1) {
      insert_canonical(out, one_vertex_graph(1, 1));
    } else if (n >= 1) {
      for (const auto& [cert, base] : get(g, n - 1)) {
        for (const auto& cand : attach_tail(base, n)) insert_canonical(out, cand);
      }
    } else {
      for (const auto& [cert, base] : get(g - 1, 2)) insert_canonical(out, glue_first_two_tails(base));
    }
    return out;
  }

  std::optional<std::filesystem::path> cache_file(int g, int n) const {
    if (!options_.cache_dir) return std::nullopt;
    return *options_.cache_dir / ("trivalent_" + std::to_string(g) + "_" + std::to_string(n) + ".json");
  }

  bool load_cache(int g, int n, Catalog& out) const {
    auto path = cache_file(g, n);
    if (!path || !std::filesystem::exists(*path)) return false;
    std::ifstream in(*path);
    nlohmann::json j;
    try {
      in >> j;
      for (const auto& item : j.at("graphs")) {
        out.emplace(item.at("certificate").get<std::string>(), graph_from_json(item.at("graph")));
      }
    } catch (const std::exception&) {
      out.clear();
      return false;
    }
    return true;
  }

  void store_cache(int g, int n, const Catalog& catalog) const {
    auto path = cache_file(g, n);
    if (!path) return;
    std::error_code ec;
    std::filesystem::create_directories(path->parent_path(), ec);
    nlohmann::json j;
    j["g"] = g;
    j["n"] = n;
    j["graphs"] = nlohmann::json::array();
    for (const auto& [cert, graph] : catalog) {
      j["graphs"].push_back({{"certificate", cert}, {"graph", to_json(graph)}});
    }
    std::ofstream out(*path);
    if (out) out << j.dump() << '\n';
  }

  EnumerationOptions options_;
  std::map<std::pair<int, int>, Catalog> memo_;
};

}  // namespace

std::vector<EnumeratedGraph> enumerate_trivalent(int g, int n, const EnumerationOptions& options) {
  if (g < 0 || n < 0 || 2 * g - 2 + n <= 0) {
    throw Error(ErrorKind::precondition,
                "type (" + std::to_string(g) + "," + std::to_string(n) + ") is not stable");
  }
  if (2 * g - 2 + n > options.bound) {
    throw Error(ErrorKind::bound_exceeded, "2g-2+n = " + std::to_string(2 * g - 2 + n) +
                                               " exceeds the enumeration bound " +
                                               std::to_string(options.bound));
  }
  Enumerator enumerator(options);
  std::vector<EnumeratedGraph> out;
  for (const auto& [cert, graph] : enumerator.get(g, n)) out.push_back({graph, cert});
  return out;
}

}  // namespace teich::graphs
