#pragma once

#include <optional>
#include <random>
#include <string>

#include "teich/freenc/ncseries.hpp"
#include "teich/kz/matrix.hpp"
#include "teich/kz/ode.hpp"

namespace teich::kz {

/// Convention constant: with Phi = G1^-1 G0 for G' = (A/t + B/(t - 1)) G, the
/// coefficient of the word ab in Phi(a, b) is -zeta(2), so Phi(E12, E23)_13 = -zeta(2).
inline constexpr int kAssociatorAbSign = -1;

/// Residue pair (A, B) of equal size, both nilpotent.
class NilpotentPair {
 public:
  /// Throws Error(precondition) for non-square, mismatched or non-nilpotent input.
  NilpotentPair(RationalMatrix a, RationalMatrix b);

  const RationalMatrix& a() const noexcept { return a_; }
  const RationalMatrix& b() const noexcept { return b_; }
  std::size_t size() const noexcept { return a_.rows(); }
  std::size_t index_a() const noexcept { return index_a_; }
  std::size_t index_b() const noexcept { return index_b_; }
  NilpotentPair swapped() const { return NilpotentPair(b_, a_); }

 private:
  RationalMatrix a_, b_;
  std::size_t index_a_, index_b_;
};

/// Strictly upper triangular pair of size n with small integer entries,
/// conjugated by a random unimodular matrix.
NilpotentPair random_nilpotent_pair(std::size_t n, std::mt19937_64& rng);

enum class Regularization {
  frobenius,  // start from H(eps) eps^A, end with eps^-B Ht(eps)^-1 (local series to order 4)
  plain,      // start from eps^A, end with eps^-B, Richardson over eps and eps/2
};

struct ConnectionOptions {
  /// Distance of the start and end points from 0 and 1; defaults to 1e-2 with
  /// the local series (which is exact to ~1e-17 there) and 1e-6 for plain.
  std::optional<double> epsilon;
  double rtol = 1e-10;
  Regularization regularization = Regularization::frobenius;
};

struct ConnectionMatrix {
  enum class Method { ode, universal_series };
  ComplexMatrix phi;
  Method method;
  double error_estimate;
  std::optional<std::string> warning;
};

double effective_epsilon(const ConnectionOptions& options);

std::string to_string(ConnectionMatrix::Method m);
std::string to_string(Regularization r);

/// Phi(A, B) applied to the columns of `start`, for real matrices A and B of
/// size n (start is n x p). Integrates in u = log(t / (1 - t)), where the
/// equation reads dG/du = (A (1 - t) - B t) G.
RealMatrix connection_apply(const RealMatrix& a, const RealMatrix& b, const RealMatrix& start,
                            const ConnectionOptions& options = {});

/// Phi(A, B) by integration; the error estimate is the distance to a run at
/// 100x looser tolerance plus the regularization remainder.
ConnectionMatrix ode_connection_matrix(const NilpotentPair& pair, const ConnectionOptions& options = {});

/// Coefficients of Phi(a, b) in the free algebra on {a, b} up to weight W.
struct UniversalAssociator {
  int weight;
  freenc::RealNCSeries coefficients;  // letter 0 = a, letter 1 = b
  double error;                       // bound on every coefficient

  double coefficient(const std::string& word) const;  // e.g. "ab"
};

UniversalAssociator universal_associator(int weight = 6, const ConnectionOptions& options = {});

/// Sum over words of coefficient * word(A, B); a truncation warning is
/// attached when some word of length W + 1 in A, B is nonzero.
ConnectionMatrix specialize_associator(const UniversalAssociator& u, const NilpotentPair& pair);

/// Letter swap a <-> b.
freenc::RealNCSeries swap_letters(const freenc::RealNCSeries& x);

}  // namespace teich::kz
