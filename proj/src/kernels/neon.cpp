#include "teich/kernels/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

#include <algorithm>
#include <cmath>

namespace teich::kernels {

namespace {

void axpy(double a, const double* x, double* y, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(y + i, vfmaq_f64(vld1q_f64(y + i), va, vld1q_f64(x + i)));
  for (; i < n; ++i) y[i] += a * x[i];
}

void gemm_acc(double alpha, const double* a, const double* b, double* c, std::size_t m, std::size_t k,
              std::size_t n) {
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t p = 0; p < k; ++p) {
      const double s = alpha * a[i * k + p];
      if (s != 0.0) axpy(s, b + p * n, c + i * n, n);
    }
  }
}

double error_norm(const double* err, const double* y0, const double* y1, std::size_t n, double atol,
                  double rtol) {
  const float64x2_t vat = vdupq_n_f64(atol), vrt = vdupq_n_f64(rtol);
  float64x2_t worst = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t scale = vfmaq_f64(vat, vrt, vmaxq_f64(vabsq_f64(vld1q_f64(y0 + i)), vabsq_f64(vld1q_f64(y1 + i))));
    worst = vmaxq_f64(worst, vdivq_f64(vabsq_f64(vld1q_f64(err + i)), scale));
  }
  double out = vmaxvq_f64(worst);
  for (; i < n; ++i) {
    const double scale = atol + rtol * std::max(std::abs(y0[i]), std::abs(y1[i]));
    out = std::max(out, std::abs(err[i]) / scale);
  }
  return out;
}

}  // namespace

const KernelTable* neon_kernels() noexcept {
  static const KernelTable table{Isa::neon, axpy, gemm_acc, error_norm};
  return &table;
}

}  // namespace teich::kernels

#else

namespace teich::kernels {
const KernelTable* neon_kernels() noexcept { return nullptr; }
}  // namespace teich::kernels

#endif
