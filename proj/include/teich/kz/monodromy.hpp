#pragma once

#include <map>
#include <string>
#include <vector>

#include "teich/graphs/groupoid.hpp"
#include "teich/kz/associator.hpp"

namespace teich::kz {

/// Matrix polynomial sum_k C_k x^k in the formal symbol x = pi i, with
/// rational coefficient matrices.
class PiMatrix {
 public:
  explicit PiMatrix(std::size_t n) : n_(n) {}
  PiMatrix(std::size_t n, std::vector<RationalMatrix> coefficients);

  static PiMatrix identity(std::size_t n);
  /// exp(c pi i N) for nilpotent N.
  static PiMatrix exp_pi_i(const RationalMatrix& nilpotent, const Rational& c = Rational(1));

  std::size_t size() const noexcept { return n_; }
  /// Coefficient of (pi i)^k, trailing zero coefficients removed.
  const std::vector<RationalMatrix>& coefficients() const noexcept { return c_; }

  friend PiMatrix operator*(const PiMatrix& x, const PiMatrix& y);
  friend bool operator==(const PiMatrix& x, const PiMatrix& y) { return x.n_ == y.n_ && x.c_ == y.c_; }

  ComplexMatrix evaluate() const;
  /// Entry (i, j) as text, e.g. "1 + 1/2*pi*i".
  std::string entry_string(std::size_t i, std::size_t j) const;

 private:
  void trim();

  std::size_t n_;
  std::vector<RationalMatrix> c_;
};

struct DehnMonodromy {
  PiMatrix exact;
  ComplexMatrix numeric;
};

/// exp(pi i Res); throws Error(precondition) when Res is not nilpotent.
DehnMonodromy half_dehn_monodromy(const RationalMatrix& residue);

using ResidueMap = std::map<graphs::EdgeId, RationalMatrix>;

struct GroupoidEvaluation {
  ComplexMatrix value;
  double error_estimate;
  std::vector<std::string> warnings;
};

/// Product M_0 M_1 ... M_{n-1} in word order, with M_i = exp(pi i Res_e) for
/// HalfDehn(e) and Phi(Res_e, Res_e') for Fusing(e, e'). Simple moves raise
/// Error(unsupported); missing or inconsistent residues raise Error(precondition)
/// with the move index.
GroupoidEvaluation evaluate_groupoid_word(const graphs::GroupoidWord& word, const ResidueMap& residues,
                                          const UniversalAssociator& u);

}  // namespace teich::kz
