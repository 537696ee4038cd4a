#include "haarwell/monotone.hpp"

#include <unordered_map>

#include "haarwell/errors.hpp"

namespace haarwell {

namespace {

struct Memo {
  int k;
  int order;
  std::unordered_map<long long, BigInt> table;

  long long key(long rank, int l, int jmax) const {
    return (rank * (order + 1) + l) * (k + 1) + jmax;
  }
};

// f(sigma, l, jmax) counts monotone factorizations of sigma of length l whose
// legs all satisfy j <= jmax. Peeling the rightmost factor (i j), the prefix
// is a monotone factorization of sigma . (i j) with legs <= j.
BigInt count_rec(const Permutation& sigma, int l, int jmax, Memo& memo) {
  if (l == 0) return sigma.is_identity() ? BigInt(1) : BigInt(0);
  const long long key = memo.key(sigma.rank(), l, jmax);
  if (auto it = memo.table.find(key); it != memo.table.end()) return it->second;
  BigInt total(0);
  for (int j = 2; j <= jmax; ++j)
    for (int i = 1; i < j; ++i) {
      const Permutation prefix =
          compose(sigma, Permutation::transposition(memo.k, i, j));
      total += count_rec(prefix, l - 1, j, memo);
    }
  memo.table.emplace(key, total);
  return total;
}

}  // namespace

BigInt count_monotone_factorizations(const Permutation& sigma, int length,
                                     int max_order) {
  if (length < 0) throw std::domain_error("count_monotone_factorizations: negative length");
  if (length > max_order)
    throw CapError("count_monotone_factorizations: length " + std::to_string(length) +
                   " exceeds cap " + std::to_string(max_order));
  // Parity obstruction: a product of l transpositions has sign (-1)^l.
  if ((length - sigma.length()) % 2 != 0) return BigInt(0);
  Memo memo{sigma.degree(), length, {}};
  return count_rec(sigma, length, sigma.degree(), memo);
}

std::vector<BigInt> monotone_count_profile(const Permutation& sigma, int order,
                                           int max_order) {
  if (order < 0) throw std::domain_error("monotone_count_profile: negative order");
  if (order > max_order)
    throw CapError("monotone_count_profile: order " + std::to_string(order) +
                   " exceeds cap " + std::to_string(max_order));
  Memo memo{sigma.degree(), order, {}};
  std::vector<BigInt> out(order + 1);
  for (int l = 0; l <= order; ++l) {
    if ((l - sigma.length()) % 2 != 0) continue;  // parity: count is zero
    out[l] = count_rec(sigma, l, sigma.degree(), memo);
  }
  return out;
}

}  // namespace haarwell
