#pragma once

namespace teich::oracle {

/// zeta(s) for integer s >= 2: direct sum to N - 1 plus the Euler-Maclaurin
/// tail from N through the B4 term.
double direct_sum_zeta(int s, int n_terms = 1000);

/// zeta(2, 1) = sum_n H_{n-1} / n^2, compensated sum to N with the tail
/// (ln N + gamma + 1) / N.
double double_sum_zeta21(long n_terms = 2'000'000);

}  // namespace teich::oracle
