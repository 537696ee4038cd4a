#include "haarwell/rational_function.hpp"

#include <stdexcept>

#include "haarwell/errors.hpp"

namespace haarwell {

RationalFunction::RationalFunction(const BigRational& c)
    : num_(c.num()), den_(c.den()) {}

RationalFunction::RationalFunction(IntPolynomial num, IntPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
  normalize();
}

RationalFunction RationalFunction::variable() {
  return RationalFunction(IntPolynomial::variable());
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = IntPolynomial(1);
    return;
  }
  IntPolynomial g = IntPolynomial::gcd(num_, den_);
  if (!g.is_one()) {
    num_ = IntPolynomial::div_exact(num_, g);
    den_ = IntPolynomial::div_exact(den_, g);
  }
  BigInt cn = num_.content();
  BigInt cd = den_.content();
  BigInt c;
  mpz_gcd(c.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  if (c != 1) {
    num_ = IntPolynomial::div_exact(num_, IntPolynomial(c));
    den_ = IntPolynomial::div_exact(den_, IntPolynomial(c));
  }
  if (den_.leading() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

BigRational RationalFunction::constant_value() const {
  if (!is_constant()) throw std::domain_error("RationalFunction: not constant");
  if (num_.is_zero()) return BigRational(0);
  return BigRational(num_.coeff(0), den_.coeff(0));
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw std::domain_error("RationalFunction: division by zero");
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  normalize();
  return *this;
}

BigRational RationalFunction::evaluate_at(const BigRational& n0) const {
  BigRational d = den_.evaluate(n0);
  if (d.is_zero())
    throw PoleError("pole at n = " + n0.to_string() + " in " + to_string());
  return num_.evaluate(n0) / d;
}

namespace {

// Count printed monomials, to decide parenthesization.
int term_count(const IntPolynomial& p) {
  int c = 0;
  for (int d = 0; d <= p.degree(); ++d)
    if (p.coeff(d) != 0) ++c;
  return c;
}

// A denominator prints bare when it is a constant or a single power of n with
// unit coefficient; otherwise it needs parentheses.
bool denom_needs_parens(const IntPolynomial& p) {
  if (p.is_constant()) return false;
  if (term_count(p) > 1) return true;
  return p.leading() != 1;
}

}  // namespace

std::string RationalFunction::to_string() const {
  if (den_.is_one()) return num_.to_string();
  std::string ns = num_.to_string();
  if (term_count(num_) > 1) ns = "(" + ns + ")";
  std::string ds = den_.to_string();
  if (denom_needs_parens(den_)) ds = "(" + ds + ")";
  return ns + "/" + ds;
}

std::string RationalFunction::to_cache_string() const {
  return num_.to_sparse_string() + " / " + den_.to_sparse_string();
}

RationalFunction RationalFunction::parse_cache(const std::string& s) {
  const size_t slash = s.find(" / ");
  if (slash == std::string::npos)
    throw ParseError("bad rational function entry: '" + s + "'");
  IntPolynomial num = IntPolynomial::parse_sparse(s.substr(0, slash));
  IntPolynomial den = IntPolynomial::parse_sparse(s.substr(slash + 3));
  return RationalFunction(std::move(num), std::move(den));
}

}  // namespace haarwell
