#pragma once

#include <vector>

#include "haarwell/permutation.hpp"
#include "haarwell/rational.hpp"

namespace haarwell {

// Default cap on the factorization length / expansion order.
inline constexpr int kDefaultMaxOrder = 12;

// Number of monotone factorizations sigma = (i_1 j_1)...(i_l j_l) with
// i_p < j_p and j_1 <= j_2 <= ... <= j_l, counted by memoized depth-first
// enumeration over the rightmost factor. Zero whenever l and the
// transposition length of sigma differ in parity.
BigInt count_monotone_factorizations(const Permutation& sigma, int length,
                                     int max_order = kDefaultMaxOrder);

// Counts for every length 0..order at once (shared memo).
std::vector<BigInt> monotone_count_profile(const Permutation& sigma, int order,
                                           int max_order = kDefaultMaxOrder);

}  // namespace haarwell
