#include "teich/oracle/algebra_oracle.hpp"

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <vector>

namespace teich::oracle {

namespace {

using Word = std::vector<int>;
using Poly = std::map<Word, mpq_class>;

std::vector<Word> all_words(int r, int k) {
  std::vector<Word> out;
  Word w(k, 0);
  while (true) {
    out.push_back(w);
    int p = k - 1;
    while (p >= 0 && w[p] == r - 1) w[p--] = 0;
    if (p < 0) break;
    ++w[p];
  }
  return out;
}

Poly multiply(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [u, cu] : a) {
    for (const auto& [v, cv] : b) {
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      out[w] += cu * cv;
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

Poly commutator(const Poly& a, const Poly& b) {
  Poly out = multiply(a, b);
  for (const auto& [w, c] : multiply(b, a)) out[w] -= c;
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

Poly left_normed(const Word& w) {
  Poly p{{{w.back()}, 1}};
  for (int i = static_cast<int>(w.size()) - 2; i >= 0; --i) p = commutator(Poly{{{w[i]}, 1}}, p);
  return p;
}

// Gaussian elimination pivoting on the largest word of each row.
class Basis {
 public:
  bool add(Poly v) {
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
      auto found = v.find(it->first);
      if (found == v.end()) continue;
      const mpq_class f = found->second;
      for (const auto& [w, c] : it->second) v[w] -= f * c;
      for (auto jt = v.begin(); jt != v.end();) jt = jt->second == 0 ? v.erase(jt) : std::next(jt);
    }
    if (v.empty()) return false;
    const Word pivot = v.rbegin()->first;
    const mpq_class lead = v.rbegin()->second;
    for (auto& [w, c] : v) c /= lead;
    // keep existing rows reduced against the new pivot
    for (auto& [key, row] : rows_) {
      auto found = row.find(pivot);
      if (found == row.end()) continue;
      const mpq_class f = found->second;
      for (const auto& [w, c] : v) row[w] -= f * c;
      for (auto jt = row.begin(); jt != row.end();) jt = jt->second == 0 ? row.erase(jt) : std::next(jt);
    }
    rows_.emplace(pivot, std::move(v));
    return true;
  }
  std::size_t rank() const { return rows_.size(); }

 private:
  std::map<Word, Poly> rows_;
};

std::vector<Poly> independent_left_normed(int r, int k) {
  Basis basis;
  std::vector<Poly> out;
  for (const auto& w : all_words(r, k)) {
    Poly p = left_normed(w);
    if (basis.add(p)) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

std::int64_t brute_force_lyndon_count(int r, int k) {
  std::int64_t count = 0;
  for (const auto& w : all_words(r, k)) {
    bool smallest = true;
    for (int i = 1; i < k && smallest; ++i) {
      Word rot(w.begin() + i, w.end());
      rot.insert(rot.end(), w.begin(), w.begin() + i);
      if (!(w < rot)) smallest = false;
    }
    if (smallest) ++count;
  }
  return count;
}

std::int64_t left_normed_lie_dim(int r, int k) {
  return static_cast<std::int64_t>(independent_left_normed(r, k).size());
}

std::int64_t derived_square_dim(int r, int k) {
  Basis span;
  for (int i = 2; k - i >= 2; ++i) {
    const auto left = independent_left_normed(r, i);
    const auto right = independent_left_normed(r, k - i);
    for (const auto& a : left) {
      for (const auto& b : right) span.add(commutator(a, b));
    }
  }
  return static_cast<std::int64_t>(span.rank());
}

std::int64_t metabelian_dim(int r, int k) {
  if (k < 2) throw std::invalid_argument("metabelian formula needs k >= 2");
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(r + k - 2), static_cast<unsigned long>(k));
  return (k - 1) * b.get_si();
}

}  // namespace teich::oracle
