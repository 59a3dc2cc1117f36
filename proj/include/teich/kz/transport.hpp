#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "teich/kz/associator.hpp"
#include "teich/kz/matrix.hpp"

namespace teich::kz {

/// sum_j residue_j dz / (z - pole_j).
struct RationalForm {
  struct Pole {
    Complex location;
    Complex residue;
  };
  std::vector<Pole> poles;

  Complex operator()(Complex z) const;
  static RationalForm dlog(Complex pole, Complex residue = 1.0) { return {{{pole, residue}}}; }
};

/// z(s) = from + (to - from) s^warp for s in [0, 1].
struct LineSegment {
  Complex from, to;
  double warp = 1.0;
};

/// z(s) = center + radius exp(i (theta0 + (theta1 - theta0) s)).
struct ArcSegment {
  Complex center;
  double radius;
  double theta0, theta1;
};

using Segment = std::variant<LineSegment, ArcSegment>;

Complex segment_start(const Segment& s);
Complex segment_end(const Segment& s);

struct FormPath {
  std::vector<Segment> segments;
  std::vector<RationalForm> forms;
  double margin = 1e-3;
};

/// Throws Error(precondition) for gaps between segments, an empty path with
/// forms, or a segment closer than `margin` to a pole.
void validate(const FormPath& fp);

struct TransportOptions {
  double rtol = 1e-12;
};

/// Solution Y(1) of Y' = N Y, Y(0) = I, with N = sum_i e_{i,i+1} w_i(z) z'.
/// Entry (i, j+1) is the iterated integral of w_i ... w_j with w_i outermost;
/// concatenation gives T(first then second) = T(second) T(first).
ComplexMatrix nilpotent_transport(const FormPath& fp, const TransportOptions& options = {});

/// Transport along [0, 1] for forms with poles only at 0 and 1 and real
/// residues, regularized like the connection matrix: it equals Phi(A, B) with
/// A = sum e_{i,i+1} res_0(w_i) and B = sum e_{i,i+1} res_1(w_i).
ConnectionMatrix regularized_unit_transport(const std::vector<RationalForm>& forms,
                                            const ConnectionOptions& options = {});

/// Largest entry deviation between the two transports; throws
/// Error(precondition) when endpoints or forms differ.
double homotopy_invariance_check(const FormPath& fp1, const FormPath& fp2, const TransportOptions& options = {});

}  // namespace teich::kz
