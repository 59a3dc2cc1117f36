#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "teich/kernels/kernels.hpp"

namespace teich::kz {

struct OdeOptions {
  double rtol = 1e-10;
  double atol = 1e-13;
  double h_min = 1e-12;  // step floor; reaching it is an integrator failure
  std::size_t max_steps = 1'000'000;
};

struct OdeStats {
  std::size_t accepted = 0;
  std::size_t rejected = 0;
};

/// dy = f(t, y), written into the third argument.
using Rhs = std::function<void(double, const double*, double*)>;

/// Dormand-Prince 5(4) with local extrapolation and a standard step controller,
/// integrating y in place from t0 to t1 (either direction). Throws Error(numeric)
/// when the step floor or the step budget is reached.
OdeStats integrate_dopri5(const Rhs& f, double t0, double t1, std::vector<double>& y,
                          const OdeOptions& options = {},
                          const kernels::KernelTable& kernels = kernels::active_kernels());

}  // namespace teich::kz
