#include "teich/graphs/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "teich/error.hpp"

namespace teich::graphs {

namespace {

using Signature = std::vector<int>;

std::vector<int> recolor(const std::vector<Signature>& sigs) {
  std::vector<Signature> distinct = sigs;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<int> colors(sigs.size());
  for (std::size_t i = 0; i < sigs.size(); ++i) {
    colors[i] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sigs[i]) -
                                 distinct.begin());
  }
  return colors;
}

struct Indexed {
  std::vector<VertexId> ids;
  std::vector<std::pair<int, int>> edges;          // vertex indices
  std::vector<std::pair<int, int>> numbered_tails;  // (number, vertex index)
  std::vector<int> unnumbered_tails;                // vertex index

  explicit Indexed(const StableGraph& g) : ids(g.vertices()) {
    auto index = [&](VertexId v) {
      auto it = std::lower_bound(ids.begin(), ids.end(), v);
      if (it == ids.end() || *it != v) throw Error(ErrorKind::structural, "dangling vertex reference");
      return static_cast<int>(it - ids.begin());
    };
    for (const auto& e : g.edges()) edges.emplace_back(index(e.source), index(e.target));
    for (const auto& t : g.tails()) {
      if (t.number) {
        numbered_tails.emplace_back(*t.number, index(t.vertex));
      } else {
        unnumbered_tails.push_back(index(t.vertex));
      }
    }
    std::sort(numbered_tails.begin(), numbered_tails.end());
  }
};

std::vector<int> refine(const Indexed& g) {
  const std::size_t n = g.ids.size();
  std::vector<Signature> sigs(n);
  for (std::size_t v = 0; v < n; ++v) sigs[v] = {0, 0};
  for (const auto& [a, b] : g.edges) {
    sigs[a][0] += 1;
    sigs[b][0] += 1;
    if (a == b) sigs[a][1] += 1;
  }
  for (const auto& [num, v] : g.numbered_tails) {
    sigs[v][0] += 1;
    sigs[v].push_back(num);
  }
  for (int v : g.unnumbered_tails) {
    sigs[v][0] += 1;
    sigs[v].push_back(-1);
  }
  for (auto& s : sigs) std::sort(s.begin() + 2, s.end());
  std::vector<int> colors = recolor(sigs);
  std::size_t classes = 0;
  for (;;) {
    std::vector<Signature> next(n);
    for (std::size_t v = 0; v < n; ++v) next[v] = {colors[v]};
    for (const auto& [a, b] : g.edges) {
      next[a].push_back(colors[b]);
      next[b].push_back(colors[a]);
    }
    for (auto& s : next) std::sort(s.begin() + 1, s.end());
    colors = recolor(next);
    const std::size_t k = static_cast<std::size_t>(*std::max_element(colors.begin(), colors.end())) + 1;
    if (k == classes) break;
    classes = k;
  }
  return colors;
}

std::vector<int> encode(const Indexed& g, const std::vector<int>& pos, const std::vector<int>& colors) {
  std::vector<int> code;
  const int n = static_cast<int>(g.ids.size());
  code.push_back(n);
  code.push_back(static_cast<int>(g.edges.size()));
  code.push_back(static_cast<int>(g.numbered_tails.size() + g.unnumbered_tails.size()));
  std::vector<int> by_pos(n);
  for (int v = 0; v < n; ++v) by_pos[pos[v]] = colors[v];
  code.insert(code.end(), by_pos.begin(), by_pos.end());
  std::vector<std::pair<int, int>> es;
  es.reserve(g.edges.size());
  for (const auto& [a, b] : g.edges) es.emplace_back(std::min(pos[a], pos[b]), std::max(pos[a], pos[b]));
  std::sort(es.begin(), es.end());
  for (const auto& [a, b] : es) {
    code.push_back(a);
    code.push_back(b);
  }
  for (const auto& [num, v] : g.numbered_tails) code.push_back(pos[v]);
  std::vector<int> un;
  for (int v : g.unnumbered_tails) un.push_back(pos[v]);
  std::sort(un.begin(), un.end());
  code.insert(code.end(), un.begin(), un.end());
  return code;
}

}  // namespace

CanonicalLabeling canonical_labeling(const StableGraph& graph, std::size_t max_permutations) {
  Indexed g(graph);
  const int n = static_cast<int>(g.ids.size());
  std::vector<int> colors = refine(g);

  std::map<int, std::vector<int>> classes;
  for (int v = 0; v < n; ++v) classes[colors[v]].push_back(v);
  std::vector<std::vector<int>> members;
  double count = 1;
  for (auto& [c, vs] : classes) {
    for (std::size_t k = 2; k <= vs.size(); ++k) count *= static_cast<double>(k);
    members.push_back(vs);
  }
  if (count > static_cast<double>(max_permutations)) {
    throw Error(ErrorKind::bound_exceeded,
                "canonical form search needs " + std::to_string(static_cast<long long>(count)) +
                    " permutations");
  }

  std::vector<int> pos(n);
  std::vector<int> best_code;
  std::vector<int> best_pos;
  // Enumerate the product of per-class permutations.
  auto assign = [&](auto&& self, std::size_t cls, int start) -> void {
    if (cls == members.size()) {
      auto code = encode(g, pos, colors);
      if (best_code.empty() || code < best_code) {
        best_code = std::move(code);
        best_pos = pos;
      }
      return;
    }
    auto perm = members[cls];
    std::sort(perm.begin(), perm.end());
    do {
      for (std::size_t i = 0; i < perm.size(); ++i) pos[perm[i]] = start + static_cast<int>(i);
      self(self, cls + 1, start + static_cast<int>(perm.size()));
    } while (std::next_permutation(perm.begin(), perm.end()));
  };
  assign(assign, 0, 0);

  CanonicalLabeling out;
  out.order.resize(n);
  for (int v = 0; v < n; ++v) out.order[best_pos[v]] = g.ids[v];
  std::ostringstream cert;
  for (std::size_t i = 0; i < best_code.size(); ++i) cert << (i ? "." : "") << best_code[i];
  out.certificate = cert.str();
  return out;
}

std::string canonical_form(const StableGraph& graph) { return canonical_labeling(graph).certificate; }

StableGraph canonical_graph(const StableGraph& graph) {
  auto lab = canonical_labeling(graph);
  std::map<VertexId, int> pos;
  for (std::size_t i = 0; i < lab.order.size(); ++i) pos[lab.order[i]] = static_cast<int>(i);
  std::vector<VertexId> vertices(lab.order.size());
  std::iota(vertices.begin(), vertices.end(), 0);
  std::vector<std::pair<int, int>> ends;
  for (const auto& e : graph.edges()) {
    int a = pos[e.source], b = pos[e.target];
    ends.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(ends.begin(), ends.end());
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < ends.size(); ++i) {
    edges.push_back({static_cast<EdgeId>(i), ends[i].first, ends[i].second});
  }
  std::vector<Tail> tails;
  std::vector<int> unnumbered;
  for (const auto& t : graph.tails()) {
    if (t.number) {
      tails.push_back({*t.number, pos[t.vertex], t.number});
    } else {
      unnumbered.push_back(pos[t.vertex]);
    }
  }
  std::sort(unnumbered.begin(), unnumbered.end());
  for (std::size_t i = 0; i < unnumbered.size(); ++i) {
    tails.push_back({static_cast<TailId>(tails.size() + 1), unnumbered[i], std::nullopt});
  }
  return StableGraph(std::move(vertices), std::move(edges), std::move(tails));
}

bool isomorphic(const StableGraph& a, const StableGraph& b) {
  return canonical_form(a) == canonical_form(b);
}

}  // namespace teich::graphs
