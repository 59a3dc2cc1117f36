#include "teich/oracle/graph_oracle.hpp"

#include <algorithm>
#include <functional>
#include <array>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

namespace teich::oracle {

namespace {

struct Multigraph {
  int vertices = 0;
  std::vector<std::array<int, 2>> edges;  // unordered endpoint pairs
  std::vector<int> tail_vertex;           // tail i + 1 sits at tail_vertex[i]
};

bool connected(const Multigraph& m) {
  std::vector<int> parent(m.vertices);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : m.edges) parent[find(e[0])] = find(e[1]);
  for (int v = 0; v < m.vertices; ++v) {
    if (find(v) != find(0)) return false;
  }
  return true;
}

std::vector<int> encode(const Multigraph& m, const std::vector<int>& perm) {
  std::vector<int> code;
  std::vector<std::array<int, 2>> es;
  for (const auto& e : m.edges) {
    int a = perm[e[0]], b = perm[e[1]];
    es.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(es.begin(), es.end());
  for (const auto& e : es) {
    code.push_back(e[0]);
    code.push_back(e[1]);
  }
  for (int v : m.tail_vertex) code.push_back(perm[v]);
  return code;
}

std::vector<int> certificate(const Multigraph& m) {
  std::vector<int> perm(m.vertices);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best;
  do {
    auto c = encode(m, perm);
    if (best.empty() || c < best) best = c;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

void matchings(std::vector<int>& free_slots, std::vector<std::array<int, 2>>& acc,
               const std::function<void()>& emit) {
  if (free_slots.empty()) {
    emit();
    return;
  }
  const int first = free_slots.front();
  for (std::size_t j = 1; j < free_slots.size(); ++j) {
    const int partner = free_slots[j];
    std::vector<int> rest;
    for (std::size_t k = 1; k < free_slots.size(); ++k) {
      if (k != j) rest.push_back(free_slots[k]);
    }
    acc.push_back({first / 3, partner / 3});
    matchings(rest, acc, emit);
    acc.pop_back();
  }
}

}  // namespace

std::size_t brute_force_trivalent_count(int g, int n) {
  const int vertices = 2 * g - 2 + n;
  if (vertices <= 0) throw std::invalid_argument("unstable type");
  const int slots = 3 * vertices;
  std::set<std::vector<int>> seen;
  std::vector<int> tail_slot(n);
  std::vector<bool> used(slots, false);

  auto place = [&](auto&& self, int i) -> void {
    if (i == n) {
      std::vector<int> free_slots;
      for (int s = 0; s < slots; ++s) {
        if (!used[s]) free_slots.push_back(s);
      }
      std::vector<std::array<int, 2>> acc;
      matchings(free_slots, acc, [&] {
        Multigraph m{vertices, acc, {}};
        for (int s : tail_slot) m.tail_vertex.push_back(s / 3);
        if (connected(m)) seen.insert(certificate(m));
      });
      return;
    }
    for (int s = 0; s < slots; ++s) {
      if (used[s]) continue;
      used[s] = true;
      tail_slot[i] = s;
      self(self, i + 1);
      used[s] = false;
    }
  };
  place(place, 0);
  return seen.size();
}

}  // namespace teich::oracle
