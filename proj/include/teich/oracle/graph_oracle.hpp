#pragma once

#include <cstddef>

namespace teich::oracle {

/// Number of trivalent graphs of type (g, n) with numbered tails up to
/// isomorphism, by brute force: every placement of the numbered tails into the
/// 3V half-edge slots, every perfect matching of the remaining slots, keep the
/// connected ones, and identify them by the minimum encoding over all vertex
/// permutations. Practical for 2g - 2 + n <= 4.
std::size_t brute_force_trivalent_count(int g, int n);

}  // namespace teich::oracle
