#include <algorithm>
#include <cmath>

#include "teich/kernels/kernels.hpp"

namespace teich::kernels {

namespace {

void axpy(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void gemm_acc(double alpha, const double* a, const double* b, double* c, std::size_t m, std::size_t k,
              std::size_t n) {
  for (std::size_t i = 0; i < m; ++i) {
    double* row = c + i * n;
    for (std::size_t p = 0; p < k; ++p) {
      const double s = alpha * a[i * k + p];
      if (s == 0.0) continue;
      const double* brow = b + p * n;
      for (std::size_t j = 0; j < n; ++j) row[j] += s * brow[j];
    }
  }
}

double error_norm(const double* err, const double* y0, const double* y1, std::size_t n, double atol,
                  double rtol) {
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double scale = atol + rtol * std::max(std::abs(y0[i]), std::abs(y1[i]));
    worst = std::max(worst, std::abs(err[i]) / scale);
  }
  return worst;
}

}  // namespace

const KernelTable& scalar_kernels() noexcept {
  static const KernelTable table{Isa::scalar, axpy, gemm_acc, error_norm};
  return table;
}

}  // namespace teich::kernels
