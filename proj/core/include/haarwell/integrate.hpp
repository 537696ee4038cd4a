#pragma once

#include <string>
#include <vector>

#include "haarwell/rational_function.hpp"
#include "haarwell/weingarten.hpp"

namespace haarwell {

// One matrix entry in a moment monomial; conjugated is meaningful for the
// unitary group only (orthogonal and free entries are self-adjoint and the
// flag is ignored there).
struct MonomialFactor {
  int row = 0;
  int col = 0;
  bool conjugated = false;
};

// Grammar: whitespace-separated factors "u[i,j]" and "~u[i,j]", 1-indexed.
std::vector<MonomialFactor> parse_monomial(const std::string& text);
std::string monomial_to_string(const std::vector<MonomialFactor>& factors);

struct MomentQuery {
  GroupKind group = GroupKind::Unitary;
  std::vector<MonomialFactor> factors;
  TableMode mode;
  // Largest row or column index referenced; a sampled matrix must be at
  // least this big.
  int min_dimension() const;
};

// True when the unitary monomial has unequal numbers of plain and conjugated
// factors, which forces the average to vanish by phase invariance.
bool unbalanced_zero(const MomentQuery& query);

// Exact Haar average of the monomial entry product. Zero cases (unbalanced
// unitary, odd orthogonal or free degree) return without building a table.
// Numeric modes yield a constant; symbolic modes a rational function of n.
RationalFunction integrate(const MomentQuery& query);
RationalFunction integrate(const MomentQuery& query, const WeingartenTable& table);

}  // namespace haarwell
