#include "haarwell/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

#include "haarwell/errors.hpp"

namespace haarwell {

namespace {
const BigInt kZero(0);
}

IntPolynomial::IntPolynomial(long c) {
  if (c != 0) coeffs_.push_back(BigInt(c));
}

IntPolynomial::IntPolynomial(const BigInt& c) {
  if (c != 0) coeffs_.push_back(c);
}

IntPolynomial IntPolynomial::variable() { return monomial(BigInt(1), 1); }

IntPolynomial IntPolynomial::monomial(const BigInt& c, int d) {
  IntPolynomial p;
  if (c == 0) return p;
  if (d < 0) throw std::domain_error("IntPolynomial: negative degree");
  p.coeffs_.assign(d + 1, BigInt(0));
  p.coeffs_[d] = c;
  return p;
}

IntPolynomial IntPolynomial::from_coeffs(std::vector<BigInt> coeffs) {
  IntPolynomial p;
  p.coeffs_ = std::move(coeffs);
  p.trim();
  return p;
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coeff(int d) const {
  if (d < 0 || d >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[d];
}

const BigInt& IntPolynomial::leading() const {
  if (coeffs_.empty()) return kZero;
  return coeffs_.back();
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigInt(0));
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigInt(0));
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return IntPolynomial();
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial::from_coeffs(std::move(out));
}

BigInt IntPolynomial::content() const {
  if (is_zero()) return kZero;
  BigInt g(0);
  for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (leading() < 0) g = -g;
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return IntPolynomial();
  BigInt c = content();
  IntPolynomial r = *this;
  for (auto& x : r.coeffs_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return r;
}

namespace {

// Pseudo-remainder of g by h (deg g >= deg h, h != 0), up to a scalar:
// intermediate results get multiplied by lc(h) so all arithmetic stays in Z.
// Callers take primitive parts, so the overall scalar is irrelevant.
IntPolynomial pseudo_rem(IntPolynomial g, const IntPolynomial& h) {
  const BigInt lh = h.leading();
  const int dh = h.degree();
  while (!g.is_zero() && g.degree() >= dh) {
    IntPolynomial scaled = IntPolynomial(lh) * g;
    IntPolynomial cancel = IntPolynomial::monomial(g.leading(), g.degree() - dh) * h;
    g = scaled - cancel;
  }
  return g;
}

}  // namespace

IntPolynomial IntPolynomial::gcd(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() && b.is_zero()) return IntPolynomial();
  IntPolynomial g = a.primitive_part();
  IntPolynomial h = b.primitive_part();
  if (g.degree() < h.degree()) std::swap(g, h);
  while (!h.is_zero()) {
    IntPolynomial r = pseudo_rem(g, h).primitive_part();
    g = std::move(h);
    h = std::move(r);
  }
  return g;  // primitive with positive leading coefficient
}

IntPolynomial IntPolynomial::div_exact(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("IntPolynomial: division by zero");
  if (a.is_zero()) return IntPolynomial();
  if (a.degree() < b.degree())
    throw std::domain_error("IntPolynomial: inexact division (degree)");
  std::vector<BigInt> rem = a.coeffs_;
  std::vector<BigInt> q(a.degree() - b.degree() + 1, BigInt(0));
  const BigInt& lb = b.leading();
  for (int d = static_cast<int>(q.size()) - 1; d >= 0; --d) {
    BigInt& top = rem[d + b.degree()];
    if (top == 0) continue;
    BigInt qd, r;
    mpz_tdiv_qr(qd.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    if (r != 0) throw std::domain_error("IntPolynomial: inexact division");
    q[d] = qd;
    for (int j = 0; j <= b.degree(); ++j) rem[d + j] -= qd * b.coeffs_[j];
  }
  for (const auto& c : rem)
    if (c != 0) throw std::domain_error("IntPolynomial: inexact division (remainder)");
  return from_coeffs(std::move(q));
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

BigRational IntPolynomial::evaluate(const BigRational& x) const {
  BigRational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + BigRational(*it);
  return acc;
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int d = degree(); d >= 0; --d) {
    const BigInt c = coeff(d);
    if (c == 0) continue;
    const bool neg = c < 0;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? "-" : "+";
    }
    BigInt mag = neg ? BigInt(-c) : c;
    if (mag != 1 || d == 0) out += mag.get_str();
    if (d >= 1) out += "n";
    if (d >= 2) out += "^" + std::to_string(d);
  }
  return out;
}

std::string IntPolynomial::to_sparse_string() const {
  if (is_zero()) return "0*n^0";
  std::string out;
  for (int d = degree(); d >= 0; --d) {
    const BigInt c = coeff(d);
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    out += c.get_str() + "*n^" + std::to_string(d);
  }
  return out;
}

IntPolynomial IntPolynomial::parse_sparse(const std::string& s) {
  std::vector<BigInt> coeffs;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t end = s.find('+', pos);
    if (end == std::string::npos) end = s.size();
    const std::string term = s.substr(pos, end - pos);
    const size_t star = term.find("*n^");
    if (star == std::string::npos)
      throw ParseError("bad polynomial term: '" + term + "'");
    BigInt c;
    if (mpz_set_str(c.get_mpz_t(), term.substr(0, star).c_str(), 10) != 0)
      throw ParseError("bad coefficient in term: '" + term + "'");
    int d = 0;
    try {
      size_t used = 0;
      d = std::stoi(term.substr(star + 3), &used);
      if (used != term.size() - star - 3) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw ParseError("bad exponent in term: '" + term + "'");
    }
    if (d < 0) throw ParseError("negative exponent in term: '" + term + "'");
    if (static_cast<size_t>(d) >= coeffs.size()) coeffs.resize(d + 1, BigInt(0));
    coeffs[d] += c;
    pos = end + 1;
  }
  return from_coeffs(std::move(coeffs));
}

}  // namespace haarwell
