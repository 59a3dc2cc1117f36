#include "teich/kernels/kernels.hpp"

#if defined(TEICH_HAVE_AVX2)

#include <immintrin.h>

#include <algorithm>
#include <cmath>

namespace teich::kernels {

namespace {

void axpy(double a, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

void gemm_acc(double alpha, const double* a, const double* b, double* c, std::size_t m, std::size_t k,
              std::size_t n) {
  for (std::size_t i = 0; i < m; ++i) {
    double* row = c + i * n;
    for (std::size_t p = 0; p < k; ++p) {
      const double s = alpha * a[i * k + p];
      if (s == 0.0) continue;
      axpy(s, b + p * n, row, n);
    }
  }
}

double error_norm(const double* err, const double* y0, const double* y1, std::size_t n, double atol,
                  double rtol) {
  const __m256d sign = _mm256_set1_pd(-0.0);
  const __m256d vat = _mm256_set1_pd(atol), vrt = _mm256_set1_pd(rtol);
  __m256d worst = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d a0 = _mm256_andnot_pd(sign, _mm256_loadu_pd(y0 + i));
    const __m256d a1 = _mm256_andnot_pd(sign, _mm256_loadu_pd(y1 + i));
    const __m256d scale = _mm256_fmadd_pd(vrt, _mm256_max_pd(a0, a1), vat);
    const __m256d e = _mm256_andnot_pd(sign, _mm256_loadu_pd(err + i));
    worst = _mm256_max_pd(worst, _mm256_div_pd(e, scale));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, worst);
  double out = std::max(std::max(lanes[0], lanes[1]), std::max(lanes[2], lanes[3]));
  for (; i < n; ++i) {
    const double scale = atol + rtol * std::max(std::abs(y0[i]), std::abs(y1[i]));
    out = std::max(out, std::abs(err[i]) / scale);
  }
  return out;
}

}  // namespace

const KernelTable* avx2_kernels() noexcept {
  static const KernelTable table{Isa::avx2, axpy, gemm_acc, error_norm};
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return supported ? &table : nullptr;
}

}  // namespace teich::kernels

#else

namespace teich::kernels {
const KernelTable* avx2_kernels() noexcept { return nullptr; }
}  // namespace teich::kernels

#endif
