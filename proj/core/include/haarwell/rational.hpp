#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace haarwell {

using BigInt = mpz_class;

// Arbitrary-precision rational. Invariant: stored in lowest terms with a
// positive denominator (zero is 0/1). All operations are exact.
class BigRational {
 public:
  BigRational() : v_(0) {}
  BigRational(long n) : v_(n) {}          // NOLINT: implicit by design
  BigRational(const BigInt& n) : v_(n) {} // NOLINT
  BigRational(const BigInt& num, const BigInt& den);
  BigRational(long num, long den);

  // Accepts "p", "p/q" and decimal-free signs; throws ParseError otherwise.
  static BigRational from_string(const std::string& s);

  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  BigRational operator-() const;
  BigRational& operator+=(const BigRational& o) { v_ += o.v_; return *this; }
  BigRational& operator-=(const BigRational& o) { v_ -= o.v_; return *this; }
  BigRational& operator*=(const BigRational& o) { v_ *= o.v_; return *this; }
  BigRational& operator/=(const BigRational& o);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const BigRational& a, const BigRational& b) { return a.v_ != b.v_; }
  friend bool operator<(const BigRational& a, const BigRational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const BigRational& a, const BigRational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const BigRational& a, const BigRational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const BigRational& a, const BigRational& b) { return a.v_ >= b.v_; }

  BigRational abs() const;
  double to_double() const { return v_.get_d(); }
  std::string to_string() const;

  static BigRational pow(const BigRational& base, long exp);

 private:
  mpq_class v_;  // canonical at all times
};

inline BigRational abs(const BigRational& x) { return x.abs(); }

std::ostream& operator<<(std::ostream& os, const BigRational& q);

}  // namespace haarwell
