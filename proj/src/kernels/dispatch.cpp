#include <cstdlib>
#include <string>

#include "teich/kernels/kernels.hpp"

namespace teich::kernels {

std::string_view to_string(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
  }
  return "unknown";
}

std::vector<const KernelTable*> available_kernels() {
  std::vector<const KernelTable*> out{&scalar_kernels()};
  if (auto* t = avx2_kernels()) out.push_back(t);
  if (auto* t = neon_kernels()) out.push_back(t);
  return out;
}

const KernelTable& active_kernels() {
  static const KernelTable* chosen = [] {
    const auto tables = available_kernels();
    if (const char* env = std::getenv("TEICH_ISA")) {
      for (const auto* t : tables) {
        if (to_string(t->isa) == env) return t;
      }
      return tables.front();
    }
    return tables.back();
  }();
  return *chosen;
}

}  // namespace teich::kernels
