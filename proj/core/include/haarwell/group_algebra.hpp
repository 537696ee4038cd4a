#pragma once

#include <map>

#include "haarwell/permutation.hpp"
#include "haarwell/rational_function.hpp"

namespace haarwell {

// Element of Q(n)[S_k]: finitely supported map permutation -> coefficient.
// Zero coefficients are never stored.
class GroupAlgebraElement {
 public:
  explicit GroupAlgebraElement(int k) : k_(k) {}

  static GroupAlgebraElement basis(const Permutation& p);

  int degree() const { return k_; }
  const std::map<Permutation, RationalFunction>& terms() const { return terms_; }
  RationalFunction coefficient(const Permutation& p) const;
  int support_size() const { return static_cast<int>(terms_.size()); }

  void add_term(const Permutation& p, const RationalFunction& c);

  GroupAlgebraElement& operator+=(const GroupAlgebraElement& o);
  friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) {
    return a += b;
  }
  // Convolution product: (lambda_s)(lambda_t) = lambda_{s . t}.
  friend GroupAlgebraElement operator*(const GroupAlgebraElement& a,
                                       const GroupAlgebraElement& b);
  friend GroupAlgebraElement operator*(const RationalFunction& c, GroupAlgebraElement a);
  friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    return a.k_ == b.k_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    return !(a == b);
  }

 private:
  int k_;
  std::map<Permutation, RationalFunction> terms_;
};

// The Gram element G = sum_{sigma in S_k} n^{#cycles(sigma)} lambda_sigma.
// Cap k <= 7.
GroupAlgebraElement build_gram_element(int k);

// Jucys-Murphy element J_i = sum_{j < i} lambda_{(j i)}; J_1 = 0.
// The product (n + J_1)(n + J_2)...(n + J_k) equals build_gram_element(k).
GroupAlgebraElement jm_element(int i, int k);

}  // namespace haarwell
