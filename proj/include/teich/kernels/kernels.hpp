#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace teich::kernels {

enum class Isa { scalar, avx2, neon };

std::string_view to_string(Isa isa) noexcept;

/// Dense double-precision inner loops of the ODE integrators. All matrices
/// are row-major and must not alias.
struct KernelTable {
  Isa isa;
  /// y += a x
  void (*axpy)(double a, const double* x, double* y, std::size_t n);
  /// C (m x n) += alpha A (m x k) B (k x n)
  void (*gemm_acc)(double alpha, const double* a, const double* b, double* c, std::size_t m,
                   std::size_t k, std::size_t n);
  /// max_i |err_i| / (atol + rtol max(|y0_i|, |y1_i|))
  double (*error_norm)(const double* err, const double* y0, const double* y1, std::size_t n,
                       double atol, double rtol);
};

const KernelTable& scalar_kernels() noexcept;
/// nullptr when the variant is not compiled in or the CPU lacks the extension.
const KernelTable* avx2_kernels() noexcept;
const KernelTable* neon_kernels() noexcept;

/// Every table usable on this machine, scalar first.
std::vector<const KernelTable*> available_kernels();

/// Best available table; TEICH_ISA=scalar|avx2|neon in the environment
/// forces a choice (falling back to scalar if unavailable).
const KernelTable& active_kernels();

}  // namespace teich::kernels
