#pragma once

#include <string>

#include "haarwell/polynomial.hpp"
#include "haarwell/rational.hpp"

namespace haarwell {

// Quotient of integer polynomials in n, eagerly normalized after every
// operation: numerator and denominator are coprime as polynomials, their
// integer contents are coprime, and the denominator has a positive leading
// coefficient. This makes equality a coefficient comparison.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(1) {}
  RationalFunction(long c) : num_(c), den_(1) {}           // NOLINT
  RationalFunction(IntPolynomial p) : num_(std::move(p)), den_(1) {}  // NOLINT
  RationalFunction(const BigRational& c);                  // NOLINT
  RationalFunction(IntPolynomial num, IntPolynomial den);

  static RationalFunction variable();

  const IntPolynomial& numer() const { return num_; }
  const IntPolynomial& denom() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_one(); }

  // Requires is_constant().
  BigRational constant_value() const;

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);  // domain_error on zero
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
    return !(a == b);
  }

  // Exact evaluation; throws PoleError where the denominator vanishes.
  BigRational evaluate_at(const BigRational& n0) const;

  // Human form: "n", "1/24", "-1/(n^3-n)", "(n+1)/(n^3+n^2-2n)".
  std::string to_string() const;
  // Cache form: "<numer sparse> / <denom sparse>".
  std::string to_cache_string() const;
  static RationalFunction parse_cache(const std::string& s);

 private:
  void normalize();
  IntPolynomial num_, den_;
};

}  // namespace haarwell
