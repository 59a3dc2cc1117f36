#include "teich/kz/ode.hpp"

#include <algorithm>
#include <cmath>

#include "teich/error.hpp"

namespace teich::kz {

namespace {

constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
// b - b*: difference between the 5th and embedded 4th order weights
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

}  // namespace

OdeStats integrate_dopri5(const Rhs& f, double t0, double t1, std::vector<double>& y,
                          const OdeOptions& options, const kernels::KernelTable& kern) {
  OdeStats stats;
  const std::size_t n = y.size();
  if (t0 == t1 || n == 0) return stats;
  const double dir = t1 > t0 ? 1.0 : -1.0;
  std::vector<double> k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), tmp(n), ynew(n), err(n);

  auto stage = [&](std::vector<double>& out, std::initializer_list<std::pair<double, const std::vector<double>*>> terms,
                   double h) {
    std::copy(y.begin(), y.end(), out.begin());
    for (const auto& [a, k] : terms) kern.axpy(h * a, k->data(), out.data(), n);
  };

  double t = t0;
  double h = dir * std::min(std::abs(t1 - t0), 1e-3 * std::max(1.0, std::abs(t1 - t0)));
  f(t, y.data(), k1.data());
  while (dir * (t1 - t) > 0) {
    if (stats.accepted + stats.rejected >= options.max_steps) {
      throw Error(ErrorKind::numeric, "ODE step budget exhausted");
    }
    if (dir * (t + h - t1) > 0) h = t1 - t;

    stage(tmp, {{a21, &k1}}, h);
    f(t + c2 * h, tmp.data(), k2.data());
    stage(tmp, {{a31, &k1}, {a32, &k2}}, h);
    f(t + c3 * h, tmp.data(), k3.data());
    stage(tmp, {{a41, &k1}, {a42, &k2}, {a43, &k3}}, h);
    f(t + c4 * h, tmp.data(), k4.data());
    stage(tmp, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}, h);
    f(t + c5 * h, tmp.data(), k5.data());
    stage(tmp, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}, h);
    f(t + h, tmp.data(), k6.data());
    stage(ynew, {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}}, h);
    f(t + h, ynew.data(), k7.data());

    std::fill(err.begin(), err.end(), 0.0);
    for (const auto& [e, k] : {std::pair{e1, &k1}, std::pair{e3, &k3}, std::pair{e4, &k4},
                               std::pair{e5, &k5}, std::pair{e6, &k6}, std::pair{e7, &k7}}) {
      kern.axpy(h * e, k->data(), err.data(), n);
    }
    const double norm = kern.error_norm(err.data(), y.data(), ynew.data(), n, options.atol, options.rtol);

    if (norm <= 1.0) {
      t += h;
      y.swap(ynew);
      k1.swap(k7);  // first-same-as-last
      ++stats.accepted;
    } else {
      ++stats.rejected;
    }
    const double factor = norm == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(norm, -0.2), 0.2, 5.0);
    h *= factor;
    if (std::abs(h) < options.h_min && dir * (t1 - t) > options.h_min) {
      throw Error(ErrorKind::numeric, "ODE step size fell below the floor");
    }
  }
  return stats;
}

}  // namespace teich::kz
