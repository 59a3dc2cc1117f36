#include "teich/kz/mzv.hpp"

#include <cmath>
#include <limits>

#include "teich/error.hpp"

namespace teich::kz {

namespace {

// Letters: 0 for dt/t, 1 for dt/(1 - t); outermost first.
using Letters = std::vector<int>;

Letters to_letters(const std::vector<int>& s) {
  Letters w;
  for (int si : s) {
    for (int i = 1; i < si; ++i) w.push_back(0);
    w.push_back(1);
  }
  return w;
}

// Word ending in 1 -> composition.
std::vector<int> to_indices(const Letters& w) {
  std::vector<int> s;
  int run = 0;
  for (int l : w) {
    ++run;
    if (l == 1) {
      s.push_back(run);
      run = 0;
    }
  }
  return s;
}

}  // namespace

bool is_admissible(const std::vector<int>& s) {
  if (s.empty() || s.front() < 2) return false;
  for (int x : s) {
    if (x < 1) return false;
  }
  return true;
}

Estimate multiple_polylog(const std::vector<int>& s, double z) {
  if (s.empty()) return {1.0, 0.0};
  for (int x : s) {
    if (x < 1) throw Error(ErrorKind::precondition, "indices must be positive");
  }
  if (!(z >= 0.0 && z <= 0.5)) throw Error(ErrorKind::precondition, "polylog argument outside [0, 1/2]");
  const std::size_t k = s.size();
  const int terms = z == 0.0 ? 1 : static_cast<int>(std::ceil(60.0 / -std::log2(z))) + 40;
  // partial[i] after step n: sum over n >= n_i > ... > n_k of prod_{j >= i} n_j^-s_j.
  std::vector<double> partial(k, 0.0);
  double total = 0.0, zn = 1.0, abs_total = 0.0;
  for (int n = 1; n <= terms; ++n) {
    zn *= z;
    std::vector<double> next = partial;
    for (std::size_t i = k; i-- > 0;) {
      const double below = i + 1 < k ? partial[i + 1] : 1.0;
      next[i] = partial[i] + std::pow(static_cast<double>(n), -s[i]) * below;
    }
    const double below = k > 1 ? partial[1] : 1.0;
    const double term = zn * std::pow(static_cast<double>(n), -s[0]) * below;
    total += term;
    abs_total += std::abs(term);
    partial.swap(next);
  }
  // Tail: z^n n^-s1 times a nested sum bounded by (1 + ln n)^(k-1).
  const double n = terms;
  const double tail = 2.0 * std::pow(z, n) * std::pow(1.0 + std::log(n), static_cast<double>(k - 1));
  return {total, tail + abs_total * 4 * std::numeric_limits<double>::epsilon()};
}

Estimate mzv(const std::vector<int>& s) {
  if (!is_admissible(s)) {
    throw Error(ErrorKind::precondition, "divergent composition: the first index must be >= 2");
  }
  const Letters w = to_letters(s);
  Estimate out{0.0, 0.0};
  for (std::size_t j = 0; j <= w.size(); ++j) {
    // upper part a_1..a_j over [1/2, 1] becomes swap-reversed over [0, 1/2];
    // t -> 1 - t flips both the forms and the orientation, so no sign appears
    Letters upper;
    for (std::size_t i = j; i-- > 0;) upper.push_back(1 - w[i]);
    const Letters lower(w.begin() + static_cast<long>(j), w.end());
    const Estimate u = multiple_polylog(to_indices(upper), 0.5);
    const Estimate l = multiple_polylog(to_indices(lower), 0.5);
    out.value += u.value * l.value;
    out.error += std::abs(u.value) * l.error + std::abs(l.value) * u.error + u.error * l.error;
  }
  out.error += 8 * std::numeric_limits<double>::epsilon() * std::abs(out.value);
  return out;
}

}  // namespace teich::kz
