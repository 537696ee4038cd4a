#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "haarwell/errors.hpp"
#include "haarwell/integrate.hpp"

using namespace haarwell;

namespace {

MomentQuery q(GroupKind g, const std::string& monomial, TableMode mode) {
  MomentQuery out;
  out.group = g;
  if (!monomial.empty()) out.factors = parse_monomial(monomial);
  out.mode = mode;
  return out;
}

const TableMode kSym = TableMode::symbolic();

}  // namespace

TEST_CASE("monomial parsing") {
  const auto f = parse_monomial("u[1,2] ~u[3,4]");
  REQUIRE(f.size() == 2);
  CHECK(f[0].row == 1);
  CHECK(f[0].col == 2);
  CHECK_FALSE(f[0].conjugated);
  CHECK(f[1].row == 3);
  CHECK(f[1].col == 4);
  CHECK(f[1].conjugated);
  CHECK(monomial_to_string(f) == "u[1,2] ~u[3,4]");
  CHECK_THROWS_AS(parse_monomial("u[0,1]"), ParseError);
  CHECK_THROWS_AS(parse_monomial("v[1,1]"), ParseError);
  CHECK_THROWS_AS(parse_monomial("u[1 2]"), ParseError);
  CHECK_THROWS_AS(parse_monomial(""), ParseError);
}

TEST_CASE("unitary moments, symbolic") {
  CHECK(integrate(q(GroupKind::Unitary, "u[1,1] ~u[1,1]", kSym)).to_string() == "1/n");
  // second moments of moduli
  CHECK(integrate(q(GroupKind::Unitary, "u[1,1] ~u[1,1] u[2,2] ~u[2,2]", kSym)).to_string() ==
        "1/(n^2-1)");
  CHECK(integrate(q(GroupKind::Unitary, "u[1,1] ~u[1,1] u[1,2] ~u[1,2]", kSym)).to_string() ==
        "1/(n^2+n)");
  CHECK(integrate(q(GroupKind::Unitary, "u[1,1] ~u[1,1] u[1,1] ~u[1,1]", kSym)).to_string() ==
        "2/(n^2+n)");
  // |u11 u22 - u12 u21|^2 averages to 2/(n^2+n) - 2/(n^3+n^2) hmm keep simple:
  // a genuinely off-diagonal pairing
  CHECK(integrate(q(GroupKind::Unitary, "u[1,1] u[2,2] ~u[1,2] ~u[2,1]", kSym)).to_string() ==
        "-1/(n^3-n)");
  // unbalanced monomials vanish without building a table
  CHECK(integrate(q(GroupKind::Unitary, "u[1,1]", TableMode::at(BigRational(7)))).is_zero());
  CHECK(integrate(q(GroupKind::Unitary, "u[1,1] u[2,2] ~u[1,1]", kSym)).is_zero());
  // balanced but index-incompatible
  CHECK(integrate(q(GroupKind::Unitary, "u[1,1] ~u[1,2]", kSym)).is_zero());
  // empty product integrates to one
  CHECK(integrate(q(GroupKind::Unitary, "", kSym)).is_one());
}

TEST_CASE("orthogonal moments, symbolic") {
  CHECK(integrate(q(GroupKind::Orthogonal, "u[1,1] u[1,1]", kSym)).to_string() == "1/n");
  CHECK(integrate(q(GroupKind::Orthogonal, "u[1,1] u[1,1] u[1,1] u[1,1]", kSym)).to_string() ==
        "3/(n^2+2n)");
  CHECK(integrate(q(GroupKind::Orthogonal, "u[1,1] u[1,1] u[2,2] u[2,2]", kSym)).to_string() ==
        "(n+1)/(n^3+n^2-2n)");
  CHECK(integrate(q(GroupKind::Orthogonal, "u[1,1] u[2,2] u[1,2] u[2,1]", kSym)).to_string() ==
        "-1/(n^3+n^2-2n)");
  // odd degree vanishes
  CHECK(integrate(q(GroupKind::Orthogonal, "u[1,1]", kSym)).is_zero());
  CHECK(integrate(q(GroupKind::Orthogonal, "u[1,1] u[1,1] u[2,2]", kSym)).is_zero());
  // the conjugation flag is ignored for real groups
  CHECK(integrate(q(GroupKind::Orthogonal, "~u[1,1] u[1,1]", kSym)).to_string() == "1/n");
}

TEST_CASE("free moments, symbolic") {
  CHECK(integrate(q(GroupKind::FreeOrthogonal, "u[1,1] u[1,1]", kSym)).to_string() == "1/n");
  // same fourth moment as the unitary modulus, a small coincidence
  CHECK(integrate(q(GroupKind::FreeOrthogonal, "u[1,1] u[1,1] u[1,1] u[1,1]", kSym))
            .to_string() == "2/(n^2+n)");
  CHECK(integrate(q(GroupKind::FreeOrthogonal, "u[1,1] u[1,1] u[2,2]", kSym)).is_zero());
}

TEST_CASE("numeric modes evaluate the same rational functions") {
  const BigRational n0(6);
  const auto sym = integrate(q(GroupKind::Unitary, "u[1,1] ~u[1,1] u[2,2] ~u[2,2]", kSym));
  const auto num = integrate(
      q(GroupKind::Unitary, "u[1,1] ~u[1,1] u[2,2] ~u[2,2]", TableMode::at(n0)));
  CHECK(num.constant_value() == sym.evaluate_at(n0));
  CHECK(num.constant_value() == BigRational(1, 35));

  // indices out of range for the requested dimension
  CHECK_THROWS_AS(
      integrate(q(GroupKind::Unitary, "u[3,3] ~u[3,3]", TableMode::at(BigRational(2)))),
      std::invalid_argument);
}

TEST_CASE("dimension one collapses to the circle and the sign group") {
  const TableMode one = TableMode::at(BigRational(1));
  // U(1): int u^a conj(u)^b = [a == b]
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2 && a + b <= 4; ++b) {
      std::string m;
      for (int i = 0; i < a; ++i) m += "u[1,1] ";
      for (int i = 0; i < b; ++i) m += "~u[1,1] ";
      const auto v = integrate(q(GroupKind::Unitary, m, one));
      if (a == b)
        CHECK(v.constant_value() == BigRational(1));
      else
        CHECK(v.is_zero());
    }
  // O(1) = {-1, +1}: int u^d = [d even]
  for (int d = 0; d <= 4; ++d) {
    std::string m;
    for (int i = 0; i < d; ++i) m += "u[1,1] ";
    const auto v = integrate(q(GroupKind::Orthogonal, m, one));
    if (d % 2 == 0)
      CHECK(v.constant_value() == BigRational(1));
    else
      CHECK(v.is_zero());
  }
}

TEST_CASE("integrating against an explicit table validates its shape") {
  const auto table = wg_unitary_gram(2, kSym);
  const auto query = q(GroupKind::Unitary, "u[1,1] ~u[1,1] u[2,2] ~u[2,2]", kSym);
  CHECK(integrate(query, table).to_string() == "1/(n^2-1)");
  const auto wrong_degree = wg_unitary_gram(3, kSym);
  CHECK_THROWS_AS(integrate(query, wrong_degree), std::invalid_argument);
  const auto wrong_group = wg_orthogonal(4, kSym);
  CHECK_THROWS_AS(integrate(query, wrong_group), std::invalid_argument);
}
