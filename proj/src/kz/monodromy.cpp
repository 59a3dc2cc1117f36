#include "teich/kz/monodromy.hpp"

#include <cmath>
#include <numbers>

#include "teich/error.hpp"

namespace teich::kz {

PiMatrix::PiMatrix(std::size_t n, std::vector<RationalMatrix> coefficients) : n_(n), c_(std::move(coefficients)) {
  for (const auto& m : c_) {
    if (m.rows() != n_ || m.cols() != n_) throw Error(ErrorKind::precondition, "coefficient has the wrong size");
  }
  trim();
}

PiMatrix PiMatrix::identity(std::size_t n) { return PiMatrix(n, {RationalMatrix::identity(n)}); }

PiMatrix PiMatrix::exp_pi_i(const RationalMatrix& nilpotent, const Rational& c) {
  if (!nilpotent.square() || !is_nilpotent(nilpotent)) {
    throw Error(ErrorKind::precondition, "exp(pi i N) needs a nilpotent square matrix");
  }
  const std::size_t n = nilpotent.rows();
  std::vector<RationalMatrix> coeffs{RationalMatrix::identity(n)};
  RationalMatrix term = RationalMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    term = term * nilpotent * Rational(c / static_cast<long>(k));
    if (term.is_zero()) break;
    coeffs.push_back(term);
  }
  return PiMatrix(n, std::move(coeffs));
}

void PiMatrix::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

PiMatrix operator*(const PiMatrix& x, const PiMatrix& y) {
  if (x.n_ != y.n_) throw Error(ErrorKind::precondition, "matrix dimensions do not match");
  if (x.c_.empty() || y.c_.empty()) return PiMatrix(x.n_);
  std::vector<RationalMatrix> out(x.c_.size() + y.c_.size() - 1, RationalMatrix(x.n_, x.n_));
  for (std::size_t i = 0; i < x.c_.size(); ++i) {
    for (std::size_t j = 0; j < y.c_.size(); ++j) out[i + j] += x.c_[i] * y.c_[j];
  }
  return PiMatrix(x.n_, std::move(out));
}

ComplexMatrix PiMatrix::evaluate() const {
  ComplexMatrix out(n_, n_);
  Complex power = 1;
  const Complex x(0, std::numbers::pi);
  for (const auto& m : c_) {
    out += to_complex(m) * power;
    power *= x;
  }
  return out;
}

std::string PiMatrix::entry_string(std::size_t i, std::size_t j) const {
  std::string out;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    const Rational& v = c_[k](i, j);
    if (sgn(v) == 0) continue;
    std::string term = teich::to_string(abs(v));
    if (k > 0) {
      term = (term == "1" ? "" : term + "*") + "(pi*i)";
      if (k > 1) term += "^" + std::to_string(k);
    }
    if (out.empty()) {
      out = (sgn(v) < 0 ? "-" : "") + term;
    } else {
      out += (sgn(v) < 0 ? " - " : " + ") + term;
    }
  }
  return out.empty() ? "0" : out;
}

DehnMonodromy half_dehn_monodromy(const RationalMatrix& residue) {
  PiMatrix exact = PiMatrix::exp_pi_i(residue);
  ComplexMatrix numeric = exact.evaluate();
  return {std::move(exact), std::move(numeric)};
}

namespace {

const RationalMatrix& residue_for(const ResidueMap& residues, graphs::EdgeId e, std::size_t index) {
  auto it = residues.find(e);
  if (it == residues.end()) {
    throw Error(ErrorKind::precondition, "move " + std::to_string(index) + ": no residue for edge " +
                                             std::to_string(e), index);
  }
  return it->second;
}

}  // namespace

GroupoidEvaluation evaluate_groupoid_word(const graphs::GroupoidWord& word, const ResidueMap& residues,
                                          const UniversalAssociator& u) {
  std::size_t n = 0;
  for (const auto& [e, m] : residues) {
    if (!m.square() || (n != 0 && m.rows() != n)) {
      throw Error(ErrorKind::precondition, "residue of edge " + std::to_string(e) + " has the wrong size");
    }
    n = m.rows();
    if (!is_nilpotent(m)) {
      throw Error(ErrorKind::precondition, "residue of edge " + std::to_string(e) + " is not nilpotent");
    }
  }
  GroupoidEvaluation out{ComplexMatrix::identity(n), 0.0, {}};
  for (std::size_t i = 0; i < word.size(); ++i) {
    const auto& move = word.moves()[i];
    ComplexMatrix factor;
    double error = 0;
    switch (move.kind) {
      case graphs::Move::Kind::simple:
        throw Error(ErrorKind::unsupported, "move " + std::to_string(i) + ": simple moves carry no monodromy here", i);
      case graphs::Move::Kind::half_dehn:
        factor = half_dehn_monodromy(residue_for(residues, move.edge, i)).numeric;
        error = 1e-15 * max_abs(factor);
        break;
      case graphs::Move::Kind::fusing: {
        const NilpotentPair pair(residue_for(residues, move.edge, i), residue_for(residues, move.target_edge, i));
        auto phi = specialize_associator(u, pair);
        if (phi.warning) out.warnings.push_back("move " + std::to_string(i) + ": " + *phi.warning);
        factor = std::move(phi.phi);
        error = phi.error_estimate;
        break;
      }
    }
    const double dim = static_cast<double>(n);
    out.error_estimate = dim * (max_abs(out.value) * error + out.error_estimate * max_abs(factor) +
                                out.error_estimate * error);
    out.value = out.value * factor;
  }
  return out;
}

}  // namespace teich::kz
