#include <doctest.h>

#include <cmath>
#include <random>
#include <string>
#include <tuple>

#include "teich/kernels/kernels.hpp"

using namespace teich::kernels;

namespace {

std::vector<double> random_vector(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::vector<double> v(n);
  for (auto& x : v) x = u(rng);
  return v;
}

double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace

TEST_CASE("scalar table is always present and first") {
  auto tables = available_kernels();
  REQUIRE(!tables.empty());
  CHECK(tables.front()->isa == Isa::scalar);
  bool found = false;
  for (auto* t : tables) found |= t == &active_kernels();
  CHECK(found);
}

TEST_CASE("SIMD variants agree with the scalar reference") {
  std::mt19937_64 rng(99);
  const auto& ref = scalar_kernels();
  for (const auto* t : available_kernels()) {
    CAPTURE(std::string(to_string(t->isa)));
    for (std::size_t n : {1u, 3u, 4u, 7u, 16u, 33u, 127u}) {
      auto x = random_vector(n, rng), y = random_vector(n, rng);
      auto y_ref = y;
      t->axpy(0.37, x.data(), y.data(), n);
      ref.axpy(0.37, x.data(), y_ref.data(), n);
      CHECK(max_diff(y, y_ref) < 1e-14);

      auto e = random_vector(n, rng), a0 = random_vector(n, rng), a1 = random_vector(n, rng);
      const double en = t->error_norm(e.data(), a0.data(), a1.data(), n, 1e-12, 1e-10);
      const double en_ref = ref.error_norm(e.data(), a0.data(), a1.data(), n, 1e-12, 1e-10);
      CHECK(std::abs(en - en_ref) <= 1e-14 * en_ref);
    }
    for (auto [m, k, n] : {std::tuple{1u, 1u, 1u}, std::tuple{3u, 5u, 2u}, std::tuple{8u, 8u, 8u},
                           std::tuple{13u, 7u, 9u}}) {
      auto a = random_vector(m * k, rng), b = random_vector(k * n, rng), c = random_vector(m * n, rng);
      auto c_ref = c;
      t->gemm_acc(-1.5, a.data(), b.data(), c.data(), m, k, n);
      ref.gemm_acc(-1.5, a.data(), b.data(), c_ref.data(), m, k, n);
      CHECK(max_diff(c, c_ref) < 1e-12);
    }
  }
}

TEST_CASE("gemm against a naive triple loop") {
  std::mt19937_64 rng(1);
  const std::size_t m = 4, k = 6, n = 5;
  auto a = random_vector(m * k, rng), b = random_vector(k * n, rng);
  std::vector<double> c(m * n, 0.0), naive(m * n, 0.0);
  active_kernels().gemm_acc(2.0, a.data(), b.data(), c.data(), m, k, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t p = 0; p < k; ++p) naive[i * n + j] += 2.0 * a[i * k + p] * b[p * n + j];
  CHECK(max_diff(c, naive) < 1e-12);
}
