#include "teich/freenc/lie.hpp"

#include <algorithm>

#include "teich/freenc/rowspace.hpp"

namespace teich::freenc {

namespace {

using Space = RowSpace<Word, WordLess>;

Space::Vector as_vector(const NCSeries& x) {
  return Space::Vector(x.terms().begin(), x.terms().end());
}

int moebius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  return n > 1 ? -result : result;
}

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  for (std::size_t i = 1; i < w.size(); ++i) {
    // strictly smaller than each proper rotation
    Word rot(w.begin() + i, w.end());
    rot.insert(rot.end(), w.begin(), w.begin() + i);
    if (!(w < rot)) return false;
  }
  return true;
}

std::vector<Word> lyndon_words(int r, int k) {
  std::vector<Word> out;
  if (r <= 0 || k <= 0) return out;
  std::vector<int> w{-1};
  while (!w.empty()) {
    ++w.back();
    if (static_cast<int>(w.size()) == k) out.emplace_back(w.begin(), w.end());
    const std::size_t m = w.size();
    while (static_cast<int>(w.size()) < k) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == r - 1) w.pop_back();
  }
  return out;
}

std::vector<Word> hall_basis(int r, int k) { return lyndon_words(r, k); }

std::pair<Word, Word> standard_factorization(const Word& w) {
  if (w.size() < 2) throw Error(ErrorKind::precondition, "letters have no standard factorization");
  for (std::size_t i = 1; i < w.size(); ++i) {
    Word v(w.begin() + i, w.end());
    if (is_lyndon(v)) return {Word(w.begin(), w.begin() + i), v};
  }
  throw Error(ErrorKind::precondition, "no Lyndon suffix");
}

NCSeries lyndon_polynomial(const Word& w, int r, int m) {
  if (!is_lyndon(w)) throw Error(ErrorKind::precondition, word_to_string(w) + " is not a Lyndon word");
  if (w.size() == 1) return NCSeries::letter(r, m, w[0]);
  auto [u, v] = standard_factorization(w);
  return bracket(lyndon_polynomial(u, r, m), lyndon_polynomial(v, r, m));
}

std::string bracketing_string(const Word& w) {
  if (w.size() == 1) return "x" + std::to_string(w[0] + 1);
  auto [u, v] = standard_factorization(w);
  return "[" + bracketing_string(u) + "," + bracketing_string(v) + "]";
}

LieElement lie_coordinates(const NCSeries& x) {
  LieElement out;
  NCSeries rest = x;
  while (!rest.is_zero()) {
    const auto& [w, c] = *rest.terms().begin();
    if (!is_lyndon(w)) {
      throw Error(ErrorKind::precondition,
                  "not a Lie polynomial: leading word " + word_to_string(w) + " is not Lyndon");
    }
    const Word lead = w;
    const Rational coeff = c;
    out[lead] = coeff;
    rest -= lyndon_polynomial(lead, x.letters(), x.max_length()) * coeff;
  }
  return out;
}

NCSeries lie_to_series(const LieElement& x, int r, int m) {
  NCSeries out(r, m);
  for (const auto& [w, c] : x) out += lyndon_polynomial(w, r, m) * c;
  return out;
}

std::int64_t witt_dim(int r, int k) {
  if (k < 1) throw Error(ErrorKind::precondition, "degree must be positive");
  std::int64_t sum = 0;
  for (int d = 1; d <= k; ++d) {
    if (k % d == 0) sum += moebius(d) * ipow(r, k / d);
  }
  return sum / k;
}

std::vector<std::int64_t> lcs_quotient_dims(int r, int k_max) {
  std::vector<std::int64_t> out;
  for (int k = 1; k <= k_max; ++k) out.push_back(witt_dim(r, k));
  return out;
}

std::int64_t ideal_graded_dim(int r, int m) { return ipow(r, m); }

std::vector<std::int64_t> ideal_graded_dims(int r, int m_max) {
  std::vector<std::int64_t> out;
  for (int m = 0; m <= m_max; ++m) out.push_back(ideal_graded_dim(r, m));
  return out;
}

std::size_t magnus_span_rank(int r, int m, const std::vector<FreeWord>& words) {
  Space space;
  for (const auto& w : words) space.insert(as_vector(magnus_embed(r, m, w)));
  return space.rank();
}

std::int64_t primitive_dim(int r, int k) {
  Space equations;
  for (int j = 1; j < k; ++j) {
    for (const auto& u : [&] {
           std::vector<Word> ws;
           Word w(j, 0);
           for (std::int64_t i = 0; i < ipow(r, j); ++i) {
             std::int64_t x = i;
             for (int p = j - 1; p >= 0; --p, x /= r) w[p] = static_cast<std::uint8_t>(x % r);
             ws.push_back(w);
           }
           return ws;
         }()) {
      Word v(k - j, 0);
      for (std::int64_t i = 0; i < ipow(r, k - j); ++i) {
        std::int64_t x = i;
        for (int p = k - j - 1; p >= 0; --p, x /= r) v[p] = static_cast<std::uint8_t>(x % r);
        Space::Vector row;
        for (const auto& [w, c] : shuffle(u, v)) row[w] = c;
        equations.insert(row);
      }
    }
  }
  return ipow(r, k) - static_cast<std::int64_t>(equations.rank());
}

std::vector<mpz_class> witt_generating_series(int r, int degree) {
  std::vector<mpz_class> series(degree + 1, 0);
  series[0] = 1;
  for (int k = 1; k <= degree; ++k) {
    const mpz_class c = witt_dim(r, k);
    // (1 - t^k)^(-c) = sum_j binom(c + j - 1, j) t^(kj)
    std::vector<mpz_class> factor(degree + 1, 0);
    for (int j = 0; k * j <= degree; ++j) {
      mpz_class b;
      mpz_bin_ui(b.get_mpz_t(), mpz_class(c + j - 1).get_mpz_t(), j);
      factor[k * j] = j == 0 ? mpz_class(1) : b;
    }
    std::vector<mpz_class> next(degree + 1, 0);
    for (int a = 0; a <= degree; ++a) {
      for (int b = 0; a + b <= degree; ++b) next[a + b] += series[a] * factor[b];
    }
    series = std::move(next);
  }
  return series;
}

PolylogDims polylog_dims_rank(int r, int k) {
  if (r < 1 || k < 1) throw Error(ErrorKind::precondition, "rank and degree must be positive");
  PolylogDims out{r, k, witt_dim(r, k), 0, 0, 0};
  if (k >= 4) {
    Space span;
    for (int i = 2; 2 * i <= k; ++i) {
      const auto left = lyndon_words(r, i);
      const auto right = lyndon_words(r, k - i);
      std::vector<NCSeries> lp, rp;
      for (const auto& u : left) lp.push_back(lyndon_polynomial(u, r, k));
      for (const auto& v : right) rp.push_back(lyndon_polynomial(v, r, k));
      for (std::size_t a = 0; a < lp.size(); ++a) {
        for (std::size_t b = (2 * i == k ? a + 1 : 0); b < rp.size(); ++b) {
          span.insert(as_vector(bracket(lp[a], rp[b])));
        }
      }
    }
    out.derived_span = static_cast<std::int64_t>(span.rank());
  }
  out.log_dim = k == 1 ? 0 : out.witt - out.derived_span;
  out.pol_dim = k == 1 ? r : out.witt - out.derived_span;
  return out;
}

PolylogDims polylog_dims(int g, int n, int k) {
  const int r = 2 * g + n - 1;
  if (g < 0 || n < 1 || r < 1) {
    throw Error(ErrorKind::precondition, "need g >= 0, n >= 1 and 2g + n - 1 >= 1");
  }
  return polylog_dims_rank(r, k);
}

std::map<int, std::int64_t> weight_graded_dims(int g, int n, int m) {
  const WeightedAlphabet alphabet{g, n};
  if (g < 0 || n < 1) throw Error(ErrorKind::precondition, "need g >= 0 and n >= 1");
  std::map<int, std::int64_t> dims{{0, 1}};
  for (int step = 0; step < m; ++step) {
    std::map<int, std::int64_t> next;
    for (const auto& [w, count] : dims) {
      for (int l = 0; l < alphabet.letters(); ++l) next[w + alphabet.weight(l)] += count;
    }
    dims = std::move(next);
  }
  return dims;
}

}  // namespace teich::freenc
