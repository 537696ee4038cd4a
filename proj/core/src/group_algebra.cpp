#include "haarwell/group_algebra.hpp"

#include <stdexcept>

#include "haarwell/errors.hpp"

namespace haarwell {

GroupAlgebraElement GroupAlgebraElement::basis(const Permutation& p) {
  GroupAlgebraElement e(p.degree());
  e.terms_.emplace(p, RationalFunction(1));
  return e;
}

RationalFunction GroupAlgebraElement::coefficient(const Permutation& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? RationalFunction() : it->second;
}

void GroupAlgebraElement::add_term(const Permutation& p, const RationalFunction& c) {
  if (p.degree() != k_)
    throw std::domain_error("GroupAlgebraElement: degree mismatch");
  auto it = terms_.find(p);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(p, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& o) {
  if (k_ != o.k_) throw std::domain_error("GroupAlgebraElement: degree mismatch");
  for (const auto& [p, c] : o.terms_) add_term(p, c);
  return *this;
}

GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  if (a.k_ != b.k_) throw std::domain_error("GroupAlgebraElement: degree mismatch");
  GroupAlgebraElement out(a.k_);
  for (const auto& [p, cp] : a.terms_)
    for (const auto& [q, cq] : b.terms_) out.add_term(compose(p, q), cp * cq);
  return out;
}

GroupAlgebraElement operator*(const RationalFunction& c, GroupAlgebraElement a) {
  if (c.is_zero()) return GroupAlgebraElement(a.k_);
  for (auto& [p, coeff] : a.terms_) coeff *= c;
  return a;
}

GroupAlgebraElement build_gram_element(int k) {
  if (k > 7)
    throw CapError("build_gram_element: k = " + std::to_string(k) + " exceeds cap 7");
  GroupAlgebraElement g(k);
  const IntPolynomial n = IntPolynomial::variable();
  for (const auto& sigma : Permutation::enumerate(k)) {
    IntPolynomial coeff(1);
    for (int c = 0; c < sigma.cycle_count(); ++c) coeff = coeff * n;
    g.add_term(sigma, RationalFunction(coeff));
  }
  return g;
}

GroupAlgebraElement jm_element(int i, int k) {
  if (i < 1 || i > k) throw std::domain_error("jm_element: index out of range");
  GroupAlgebraElement j(k);
  for (int a = 1; a < i; ++a)
    j.add_term(Permutation::transposition(k, a, i), RationalFunction(1));
  return j;
}

}  // namespace haarwell
