#include "teich/kz/transport.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "teich/error.hpp"
#include "teich/kz/ode.hpp"

namespace teich::kz {

Complex RationalForm::operator()(Complex z) const {
  Complex sum = 0;
  for (const auto& p : poles) sum += p.residue / (z - p.location);
  return sum;
}

namespace {

Complex arc_point(const ArcSegment& a, double s) {
  return a.center + std::polar(a.radius, a.theta0 + (a.theta1 - a.theta0) * s);
}

// Position and velocity at parameter s.
std::pair<Complex, Complex> evaluate(const Segment& seg, double s) {
  if (const auto* line = std::get_if<LineSegment>(&seg)) {
    const Complex d = line->to - line->from;
    const double w = line->warp;
    const double speed = s == 0.0 ? (w == 1.0 ? 1.0 : 0.0) : w * std::pow(s, w - 1.0);
    return {line->from + d * std::pow(s, w), d * speed};
  }
  const auto& arc = std::get<ArcSegment>(seg);
  const double dtheta = arc.theta1 - arc.theta0;
  const Complex z = arc_point(arc, s);
  return {z, Complex(0, dtheta) * (z - arc.center)};
}

double distance_to(const Segment& seg, Complex p) {
  if (const auto* line = std::get_if<LineSegment>(&seg)) {
    const Complex d = line->to - line->from;
    const double len2 = std::norm(d);
    double s = len2 == 0 ? 0.0 : std::real((p - line->from) * std::conj(d)) / len2;
    s = std::clamp(s, 0.0, 1.0);
    return std::abs(line->from + d * s - p);
  }
  const auto& arc = std::get<ArcSegment>(seg);
  double best = std::min(std::abs(arc_point(arc, 0) - p), std::abs(arc_point(arc, 1) - p));
  const Complex rel = p - arc.center;
  if (std::abs(rel) == 0) return arc.radius;
  // parameter of the closest point on the full circle, if it lies on the arc
  const double lo = std::min(arc.theta0, arc.theta1), hi = std::max(arc.theta0, arc.theta1);
  double phi = std::arg(rel);
  const double two_pi = 2 * std::numbers::pi;
  phi += two_pi * std::ceil((lo - phi) / two_pi);
  if (phi <= hi) best = std::min(best, std::abs(std::abs(rel) - arc.radius));
  return best;
}

}  // namespace

Complex segment_start(const Segment& s) { return evaluate(s, 0.0).first; }
Complex segment_end(const Segment& s) { return evaluate(s, 1.0).first; }

void validate(const FormPath& fp) {
  if (fp.segments.empty() && !fp.forms.empty()) {
    throw Error(ErrorKind::precondition, "a form path needs at least one segment");
  }
  for (std::size_t i = 0; i + 1 < fp.segments.size(); ++i) {
    const Complex gap = segment_end(fp.segments[i]) - segment_start(fp.segments[i + 1]);
    if (std::abs(gap) > 1e-12 * (1 + std::abs(segment_end(fp.segments[i])))) {
      throw Error(ErrorKind::precondition, "segment " + std::to_string(i + 1) + " does not start where segment " +
                                               std::to_string(i) + " ends", i + 1);
    }
  }
  for (std::size_t i = 0; i < fp.segments.size(); ++i) {
    if (const auto* line = std::get_if<LineSegment>(&fp.segments[i]); line && !(line->warp > 0)) {
      throw Error(ErrorKind::precondition, "segment warp must be positive", i);
    }
    for (std::size_t f = 0; f < fp.forms.size(); ++f) {
      for (const auto& pole : fp.forms[f].poles) {
        const double d = distance_to(fp.segments[i], pole.location);
        if (d < fp.margin) {
          throw Error(ErrorKind::precondition,
                      "segment " + std::to_string(i) + " passes within " + std::to_string(d) + " of a pole of form " +
                          std::to_string(f),
                      i);
        }
      }
    }
  }
}

ComplexMatrix nilpotent_transport(const FormPath& fp, const TransportOptions& options) {
  validate(fp);
  const std::size_t m = fp.forms.size(), n = m + 1;
  // Y = Yr + i Yi stacked as a 2n x n real state; N acts blockwise.
  std::vector<double> y(2 * n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) y[i * n + i] = 1.0;
  const auto& kern = kernels::active_kernels();
  OdeOptions ode;
  ode.rtol = options.rtol;
  ode.atol = options.rtol * 1e-2;
  for (const auto& seg : fp.segments) {
    auto rhs = [&](double s, const double* state, double* dy) {
      std::fill(dy, dy + 2 * n * n, 0.0);
      const auto [z, dz] = evaluate(seg, s);
      for (std::size_t i = 0; i < m; ++i) {
        const Complex c = fp.forms[i](z) * dz;
        // row i of N Y is c times row i + 1 of Y
        const double* yr = state + (i + 1) * n;
        const double* yi = state + (n + i + 1) * n;
        double* dr = dy + i * n;
        double* di = dy + (n + i) * n;
        kern.axpy(c.real(), yr, dr, n);
        kern.axpy(-c.imag(), yi, dr, n);
        kern.axpy(c.imag(), yr, di, n);
        kern.axpy(c.real(), yi, di, n);
      }
    };
    integrate_dopri5(rhs, 0.0, 1.0, y, ode, kern);
  }
  ComplexMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = Complex(y[i * n + j], y[(n + i) * n + j]);
  }
  return out;
}

ConnectionMatrix regularized_unit_transport(const std::vector<RationalForm>& forms, const ConnectionOptions& options) {
  const std::size_t n = forms.size() + 1;
  RationalMatrix a(n, n), b(n, n);
  for (std::size_t i = 0; i < forms.size(); ++i) {
    for (const auto& p : forms[i].poles) {
      if (p.residue.imag() != 0 || p.location.imag() != 0 || (p.location.real() != 0 && p.location.real() != 1)) {
        throw Error(ErrorKind::unsupported, "regularized transport needs real residues at 0 and 1 only");
      }
      Rational r(p.residue.real());
      (p.location.real() == 0 ? a : b)(i, i + 1) += r;
    }
  }
  return ode_connection_matrix(NilpotentPair(a, b), options);
}

double homotopy_invariance_check(const FormPath& fp1, const FormPath& fp2, const TransportOptions& options) {
  if (fp1.segments.empty() || fp2.segments.empty()) {
    throw Error(ErrorKind::precondition, "homotopy check needs nonempty paths");
  }
  const double tol = 1e-12;
  if (std::abs(segment_start(fp1.segments.front()) - segment_start(fp2.segments.front())) > tol ||
      std::abs(segment_end(fp1.segments.back()) - segment_end(fp2.segments.back())) > tol) {
    throw Error(ErrorKind::precondition, "paths have different endpoints");
  }
  if (fp1.forms.size() != fp2.forms.size()) throw Error(ErrorKind::precondition, "paths carry different forms");
  for (std::size_t i = 0; i < fp1.forms.size(); ++i) {
    const auto& p = fp1.forms[i].poles;
    const auto& q = fp2.forms[i].poles;
    if (p.size() != q.size()) throw Error(ErrorKind::precondition, "paths carry different forms");
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (p[j].location != q[j].location || p[j].residue != q[j].residue) {
        throw Error(ErrorKind::precondition, "paths carry different forms");
      }
    }
  }
  return max_abs_diff(nilpotent_transport(fp1, options), nilpotent_transport(fp2, options));
}

}  // namespace teich::kz
