#pragma once

#include <cstdint>

namespace teich::oracle {

/// Words of length k strictly smaller than all their proper rotations,
/// counted by checking every word.
std::int64_t brute_force_lyndon_count(int r, int k);

/// dim L_k of the free Lie algebra: rank of all left-normed brackets
/// [x_i1, [x_i2, ... x_ik]] of length k.
std::int64_t left_normed_lie_dim(int r, int k);

/// dim [L^2, L^2]_k: rank of brackets of left-normed spanning sets of L_i and
/// L_(k-i), i >= 2, each first thinned to an independent subset.
std::int64_t derived_square_dim(int r, int k);

/// Free metabelian Lie algebra: dim (L / [L^2, L^2])_k = (k - 1) C(r + k - 2, k) for k >= 2.
std::int64_t metabelian_dim(int r, int k);

}  // namespace teich::oracle
