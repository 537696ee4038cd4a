#include "haarwell/rational.hpp"

#include <ostream>
#include <stdexcept>

#include "haarwell/errors.hpp"

namespace haarwell {

BigRational::BigRational(const BigInt& num, const BigInt& den) : v_(num, den) {
  if (den == 0) throw std::domain_error("BigRational: zero denominator");
  v_.canonicalize();
}

BigRational::BigRational(long num, long den) : v_(num, den) {
  if (den == 0) throw std::domain_error("BigRational: zero denominator");
  v_.canonicalize();
}

BigRational BigRational::from_string(const std::string& s) {
  mpq_class v;
  if (v.set_str(s, 10) != 0 || v.get_den() == 0)
    throw ParseError("not a rational: '" + s + "'");
  v.canonicalize();
  BigRational r;
  r.v_ = v;
  return r;
}

BigRational BigRational::operator-() const {
  BigRational r;
  r.v_ = -v_;
  return r;
}

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) throw std::domain_error("BigRational: division by zero");
  v_ /= o.v_;
  return *this;
}

BigRational BigRational::abs() const {
  BigRational r;
  r.v_ = ::abs(v_);
  return r;
}

std::string BigRational::to_string() const { return v_.get_str(); }

BigRational BigRational::pow(const BigRational& base, long exp) {
  if (exp == 0) return BigRational(1);
  if (base.is_zero() && exp < 0)
    throw std::domain_error("BigRational: 0 to a negative power");
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), static_cast<unsigned long>(exp < 0 ? -exp : exp));
  mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), static_cast<unsigned long>(exp < 0 ? -exp : exp));
  return exp > 0 ? BigRational(n, d) : BigRational(d, n);
}

std::ostream& operator<<(std::ostream& os, const BigRational& q) {
  return os << q.to_string();
}

}  // namespace haarwell
