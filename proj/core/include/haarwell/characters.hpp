#pragma once

#include "haarwell/partitions.hpp"
#include "haarwell/rational.hpp"

namespace haarwell {

// Irreducible S_k character chi_lambda evaluated on the class mu, by the
// Murnaghan-Nakayama rule. Strips are removed for the largest remaining part
// of mu first; results are memoized on (lambda, mu) behind a mutex.
// Requires lambda.sum() == mu.sum() <= 8.
BigInt character(const YoungDiagram& lambda, const CycleType& mu);

}  // namespace haarwell
