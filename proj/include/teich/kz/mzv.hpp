#pragma once

#include <vector>

namespace teich::kz {

/// Value with an absolute error bound.
struct Estimate {
  double value;
  double error;
};

/// zeta(s1, ..., sk) = sum over n1 > n2 > ... > nk >= 1 of prod n_i^(-s_i).
/// Convergent iff s1 >= 2 and all s_i >= 1.
bool is_admissible(const std::vector<int>& s);

/// Multiple polylogarithm Li_{s1..sk}(z) = sum_{n1 > ... > nk} z^n1 / prod n_i^s_i
/// for 0 <= z <= 1/2, by nested partial sums.
Estimate multiple_polylog(const std::vector<int>& s, double z);

/// Splits the iterated integral over [0, 1] at 1/2; both halves are
/// multiple polylogarithms at 1/2 (the upper half after t -> 1 - t).
/// Throws Error(precondition) for divergent compositions.
Estimate mzv(const std::vector<int>& s);

}  // namespace teich::kz
