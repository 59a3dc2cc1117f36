#include "teich/oracle/zeta_oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace teich::oracle {

double direct_sum_zeta(int s, int n_terms) {
  if (s < 2 || n_terms < 2) throw std::invalid_argument("direct_sum_zeta needs s >= 2 and N >= 2");
  double sum = 0;
  for (int n = n_terms - 1; n >= 1; --n) sum += std::pow(double(n), -s);
  const double N = n_terms;
  const double f = std::pow(N, -s);
  const double f1 = -s * std::pow(N, -s - 1);
  const double f3 = -double(s) * (s + 1) * (s + 2) * std::pow(N, -s - 3);
  const double integral = std::pow(N, 1 - s) / (s - 1);
  return sum + integral + f / 2 - f1 / 12 + f3 / 720;
}

double double_sum_zeta21(long n_terms) {
  double sum = 0, comp = 0, harmonic = 0;
  for (long n = 1; n <= n_terms; ++n) {
    const double term = harmonic / (double(n) * double(n)) - comp;
    const double next = sum + term;
    comp = (next - sum) - term;
    sum = next;
    harmonic += 1.0 / double(n);
  }
  const double N = double(n_terms);
  return sum + (std::log(N) + 0.57721566490153286 + 1) / N;
}

}  // namespace teich::oracle
