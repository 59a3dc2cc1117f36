#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "teich/freenc/ncseries.hpp"

namespace teich::freenc {

bool is_lyndon(const Word& w);
/// Lyndon words of length exactly k over r letters, in lexicographic order
/// (Duval's generation algorithm).
std::vector<Word> lyndon_words(int r, int k);
/// Hall basis in the Lyndon flavour: the Lyndon words of length k.
std::vector<Word> hall_basis(int r, int k);

/// w = uv with v the longest proper Lyndon suffix.
std::pair<Word, Word> standard_factorization(const Word& w);
/// Standard bracketing P_w as a polynomial; its smallest word is w itself.
NCSeries lyndon_polynomial(const Word& w, int r, int m);
/// "[x1,[x1,x2]]".
std::string bracketing_string(const Word& w);

/// Coordinates in the Lyndon basis.
using LieElement = std::map<Word, Rational, WordLess>;
/// Throws Error(precondition) if x is not a Lie polynomial.
LieElement lie_coordinates(const NCSeries& x);
NCSeries lie_to_series(const LieElement& x, int r, int m);

/// (1/k) sum_{d | k} mu(d) r^(k/d).
std::int64_t witt_dim(int r, int k);
/// Ranks of the lower central series quotients of the free group F_r.
std::vector<std::int64_t> lcs_quotient_dims(int r, int k_max);
/// dim I^m / I^(m+1) for the free group = r^m.
std::int64_t ideal_graded_dim(int r, int m);
std::vector<std::int64_t> ideal_graded_dims(int r, int m_max);

/// Rank of the span of magnus_embed(w) for the given words, inside Q[F_r]/I^(m+1).
std::size_t magnus_span_rank(int r, int m, const std::vector<FreeWord>& words);

/// Dimension of the degree-k primitive polynomials, by solving the
/// deshuffle equations directly.
std::int64_t primitive_dim(int r, int k);

/// Coefficients of prod_k (1 - t^k)^(-witt(r,k)) up to t^degree.
std::vector<mpz_class> witt_generating_series(int r, int degree);

struct PolylogDims {
  int r;
  int k;
  std::int64_t witt;           // dim L_k
  std::int64_t derived_span;   // dim [L^2, L^2]_k
  std::int64_t log_dim;        // dim (L^2 / [L^2, L^2])_k
  std::int64_t pol_dim;        // dim (L / [L^2, L^2])_k
};

/// Brackets [P_u, P_v] of Lyndon polynomials with |u|, |v| >= 2 span
/// [L^2, L^2]_k; the rank is computed exactly.
PolylogDims polylog_dims_rank(int r, int k);
/// With r = 2g + n - 1.
PolylogDims polylog_dims(int g, int n, int k);

/// Letters 1..2g weigh -1, letters 2g+1..2g+n-1 weigh -2.
struct WeightedAlphabet {
  int g;
  int n;
  int letters() const { return 2 * g + n - 1; }
  int weight(int letter) const { return letter < 2 * g ? -1 : -2; }
};

/// weight -> number of degree-m words of that weight.
std::map<int, std::int64_t> weight_graded_dims(int g, int n, int m);

}  // namespace teich::freenc
