#pragma once

#include <string>
#include <vector>

#include "haarwell/rational.hpp"

namespace haarwell {

// Univariate polynomial in the dimension variable n, with arbitrary-precision
// integer coefficients. Invariant: coeffs_ has no trailing zeros, so the zero
// polynomial is the empty vector and degree() is -1 for it.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(long c);           // NOLINT: implicit constant
  IntPolynomial(const BigInt& c);  // NOLINT

  static IntPolynomial variable();
  static IntPolynomial monomial(const BigInt& c, int d);
  // coeffs[d] is the coefficient of n^d.
  static IntPolynomial from_coeffs(std::vector<BigInt> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  bool is_constant() const { return coeffs_.size() <= 1; }
  BigInt coeff(int d) const;
  const BigInt& leading() const;

  IntPolynomial operator-() const;
  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) {
    return !(a == b);
  }

  // gcd of coefficients carrying the sign of the leading coefficient; 0 for 0.
  BigInt content() const;
  IntPolynomial primitive_part() const;

  // Primitive gcd with positive leading coefficient (primitive PRS).
  static IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

  // Exact quotient a / b; throws std::domain_error if b does not divide a.
  static IntPolynomial div_exact(const IntPolynomial& a, const IntPolynomial& b);

  BigInt evaluate(const BigInt& x) const;
  BigRational evaluate(const BigRational& x) const;

  // Human form, descending degree: "n^3-2n+1", "1", "0".
  std::string to_string() const;
  // Cache form, one "c*n^d" term per nonzero coefficient joined by '+':
  // "1*n^3+-2*n^1+1*n^0".
  std::string to_sparse_string() const;
  static IntPolynomial parse_sparse(const std::string& s);

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

}  // namespace haarwell
