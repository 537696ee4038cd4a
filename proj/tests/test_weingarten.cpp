#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "haarwell/errors.hpp"
#include "haarwell/matrix.hpp"
#include "haarwell/weingarten.hpp"

using namespace haarwell;

namespace {

RationalFunction rf(const std::string& pretty_num, const std::string& pretty_den) {
  return RationalFunction(IntPolynomial::parse_sparse(pretty_num),
                          IntPolynomial::parse_sparse(pretty_den));
}

}  // namespace

TEST_CASE("pinned unitary values through degree 3") {
  const auto t1 = wg_unitary_gram(1, TableMode::symbolic());
  CHECK(t1.value(Partition({1})).to_string() == "1/n");

  const auto t2 = wg_unitary_gram(2, TableMode::symbolic());
  CHECK(t2.value(Partition({1, 1})) == rf("1*n^0", "1*n^2+-1*n^0"));
  CHECK(t2.value(Partition({2})).to_string() == "-1/(n^3-n)");

  const auto t3 = wg_unitary_gram(3, TableMode::symbolic());
  // (n^2-2)/(n(n^2-1)(n^2-4)), -1/((n^2-1)(n^2-4)), 2/(n(n^2-1)(n^2-4))
  CHECK(t3.value(Partition({1, 1, 1})) == rf("1*n^2+-2*n^0", "1*n^5+-5*n^3+4*n^1"));
  CHECK(t3.value(Partition({2, 1})) == rf("-1*n^0", "1*n^4+-5*n^2+4*n^0"));
  CHECK(t3.value(Partition({3})) == rf("2*n^0", "1*n^5+-5*n^3+4*n^1"));

  // lookups by permutation agree with lookups by class
  const auto sigma = Permutation::from_cycles("(1 3)", 3);
  CHECK(t3.value(sigma) == t3.value(Partition({2, 1})));
}

TEST_CASE("gram and character paths build identical tables") {
  for (int k = 1; k <= 4; ++k) {
    const auto gram = wg_unitary_gram(k, TableMode::symbolic());
    const auto chr = wg_unitary_character(k, TableMode::symbolic());
    CHECK(gram.class_values() == chr.class_values());
  }
  // numeric modes, including one below the degree where the gram operator
  // is singular and both paths must fall back consistently
  for (const BigRational n0 : {BigRational(2), BigRational(6), BigRational(17)}) {
    const auto gram = wg_unitary_gram(4, TableMode::at(n0));
    const auto chr = wg_unitary_character(4, TableMode::at(n0));
    CHECK(gram.class_values() == chr.class_values());
  }
}

TEST_CASE("class table matches the raw inverse gram matrix") {
  // symbolic, degree 3: invert the full 6x6 matrix independently
  const auto table = wg_unitary_gram(3, TableMode::symbolic());
  const auto raw = bareiss_inverse(unitary_gram_matrix(3));
  const auto perms = Permutation::enumerate(3);
  for (size_t i = 0; i < perms.size(); ++i)
    for (size_t j = 0; j < perms.size(); ++j) {
      const auto rel = compose(perms[j], perms[i].inverse());
      CHECK(raw(static_cast<int>(i), static_cast<int>(j)) == table.value(rel));
    }
}

TEST_CASE("numeric table matches the raw inverse at a regular point") {
  const BigRational n0(6);
  const auto table = wg_unitary_gram(4, TableMode::at(n0));
  const auto raw = bareiss_inverse(unitary_gram_matrix_at(4, n0));
  const auto perms = Permutation::enumerate(4);
  for (size_t i = 0; i < perms.size(); ++i)
    for (size_t j = 0; j < perms.size(); ++j) {
      const auto rel = compose(perms[j], perms[i].inverse());
      CHECK(raw(static_cast<int>(i), static_cast<int>(j)) ==
            table.value(rel).constant_value());
    }
}

TEST_CASE("singular dimensions use the exact Moore-Penrose pseudo-inverse") {
  // n0 = 1, k = 2: the gram matrix is the all-ones 2x2, pseudo-inverse J/4
  const auto t = wg_unitary_gram(2, TableMode::at(BigRational(1)));
  CHECK(t.value(Partition({1, 1})).constant_value() == BigRational(1, 4));
  CHECK(t.value(Partition({2})).constant_value() == BigRational(1, 4));

  // k = 3 at n0 in {1, 2}: verify the Penrose identities on the raw matrices
  for (const BigRational n0 : {BigRational(1), BigRational(2)}) {
    const auto table = wg_unitary_gram(3, TableMode::at(n0));
    const auto g = unitary_gram_matrix_at(3, n0);
    const auto perms = Permutation::enumerate(3);
    Matrix<BigRational> w(6, 6);
    for (size_t i = 0; i < perms.size(); ++i)
      for (size_t j = 0; j < perms.size(); ++j)
        w(static_cast<int>(i), static_cast<int>(j)) =
            table.value(compose(perms[j], perms[i].inverse())).constant_value();
    CHECK(g * w * g == g);
    CHECK(w * g * w == w);
    CHECK((g * w).is_symmetric());
    // and against the generic matrix pseudo-inverse
    CHECK(w == pseudo_inverse(g));
  }
}

TEST_CASE("series counts reproduce the exact values within the stated bound") {
  for (int k = 2; k <= 4; ++k) {
    const auto table = wg_unitary_gram(k, TableMode::symbolic());
    for (const auto& [type, value] : table.class_values()) {
      const auto sigma = Permutation::from_cycle_type(type, k);
      const int parity = sigma.length() % 2;
      const int next = (kDefaultMaxOrder % 2 == parity) ? kDefaultMaxOrder
                                                        : kDefaultMaxOrder - 1;
      const int order = next - 2;
      const auto counts = wg_unitary_series(sigma, next);
      const std::vector<BigInt> head(counts.begin(), counts.begin() + order + 1);
      for (const BigRational n0 : {BigRational(10), BigRational(100)}) {
        const BigRational trunc = wg_series_truncation(head, k, n0);
        const BigRational exact = value.evaluate_at(n0);
        const BigRational bound =
            BigRational(counts[static_cast<size_t>(next)]) /
            BigRational::pow(n0, k + order + 1);
        CHECK((exact - trunc).abs() <= bound);
      }
    }
  }
}

TEST_CASE("orthogonality recursion holds") {
  for (int k = 1; k <= 4; ++k) {
    const auto rep = wg_unitary_recursion_check(k, TableMode::symbolic());
    CHECK(rep.checked == static_cast<long>(Permutation::enumerate(k).size()));
    CHECK(rep.ok());
  }
  CHECK(wg_unitary_recursion_check(3, TableMode::at(BigRational(5))).ok());
  // numeric mode below the degree sits on the singular set
  CHECK_THROWS_AS(wg_unitary_recursion_check(3, TableMode::at(BigRational(2))), PoleError);
}

TEST_CASE("orthogonal degree 4 closed form") {
  // Wg matrix = ((n+2) I - J) / (n (n-1) (n+2))
  const auto t = wg_orthogonal(4, TableMode::symbolic());
  CHECK(t.value(Partition({1, 1})) == rf("1*n^1+1*n^0", "1*n^3+1*n^2+-2*n^1"));
  CHECK(t.value(Partition({2})) == rf("-1*n^0", "1*n^3+1*n^2+-2*n^1"));
  // degree 2
  const auto t2 = wg_orthogonal(2, TableMode::symbolic());
  CHECK(t2.value(Partition({1})).to_string() == "1/n");
}

TEST_CASE("orthogonal table inverts its gram matrix") {
  for (int k = 2; k <= 6; k += 2) {
    const auto table = wg_orthogonal(k, TableMode::symbolic());
    const auto basis = PairPartition::enumerate(k);
    const auto g = pairing_gram_matrix(basis);
    const int m = static_cast<int>(basis.size());
    Matrix<RationalFunction> w(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) w(i, j) = table.value(basis[i], basis[j]);
    CHECK(g * w == Matrix<RationalFunction>::identity(m));
  }
  // degree 8 numerically at n0 = 9
  const BigRational n0(9);
  const auto table = wg_orthogonal(8, TableMode::at(n0));
  const auto basis = PairPartition::enumerate(8);
  const auto g = pairing_gram_matrix_at(basis, n0);
  const int m = static_cast<int>(basis.size());
  Matrix<BigRational> w(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) w(i, j) = table.value(basis[i], basis[j]).constant_value();
  CHECK(g * w == Matrix<BigRational>::identity(m));
}

TEST_CASE("orthogonal singular dimension falls back to the raw pseudo-inverse") {
  // n0 = 1: gram matrix is all-ones 3x3, pseudo-inverse J/9
  const auto t = wg_orthogonal(4, TableMode::at(BigRational(1)));
  CHECK(t.value(Partition({2})).constant_value() == BigRational(1, 9));
  CHECK(t.value(Partition({1, 1})).constant_value() == BigRational(1, 9));

  // k = 6 at n0 = 2: verify Penrose identities on the raw 15x15 system
  const BigRational n0(2);
  const auto table = wg_orthogonal(6, TableMode::at(n0));
  const auto basis = PairPartition::enumerate(6);
  const auto g = pairing_gram_matrix_at(basis, n0);
  const int m = static_cast<int>(basis.size());
  Matrix<BigRational> w(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) w(i, j) = table.value(basis[i], basis[j]).constant_value();
  CHECK(g * w * g == g);
  CHECK(w * g * w == w);
  CHECK((g * w).is_symmetric());
}

TEST_CASE("free table small cases") {
  const auto t2 = wg_free(2, TableMode::symbolic());
  const auto b2 = PairPartition::identity(2);
  CHECK(t2.value(b2, b2).to_string() == "1/n");

  const auto t4 = wg_free(4, TableMode::symbolic());
  const auto pi = PairPartition::parse("{1,2}{3,4}", 4);
  const auto rho = PairPartition::parse("{1,4}{2,3}", 4);
  CHECK(t4.value(pi, pi) == rf("1*n^0", "1*n^2+-1*n^0"));
  CHECK(t4.value(pi, rho).to_string() == "-1/(n^3-n)");
  CHECK(t4.value(pi, rho) == t4.value(rho, pi));
  // crossing pairings are outside the basis
  const auto crossing = PairPartition::parse("{1,3}{2,4}", 4);
  CHECK_THROWS_AS(t4.value(crossing, pi), std::invalid_argument);

  // W G = I over the noncrossing basis, degree 6
  const auto t6 = wg_free(6, TableMode::symbolic());
  const auto& basis = t6.pairing_basis();
  CHECK(basis.size() == 5);
  const auto g = pairing_gram_matrix(basis);
  CHECK(g * t6.pairing_values() == Matrix<RationalFunction>::identity(5));
}

TEST_CASE("free tables accept rational dimensions above 2") {
  const auto t = wg_free(4, TableMode::at(BigRational(5, 2)));
  const auto pi = PairPartition::identity(4);
  // 1/(n^2-1) at n = 5/2
  CHECK(t.value(pi, pi).constant_value() == BigRational(4, 21));
  CHECK_THROWS_AS(wg_free(4, TableMode::at(BigRational(3, 2))), PoleError);
}

TEST_CASE("free sign survey flags nothing on a sane grid") {
  const auto rep = free_sign_survey(
      6, {BigRational(2), BigRational(5, 2), BigRational(3), BigRational(10)});
  CHECK(rep.ok());
  CHECK(rep.sign_flips.empty());
  CHECK(rep.entries_checked == 25);
  CHECK(rep.positive_entries + rep.negative_entries == 25);
}

TEST_CASE("moebius weights and the asymptotic ratio") {
  CHECK(catalan_number(0) == 1);
  CHECK(catalan_number(3) == 5);
  CHECK(catalan_number(6) == 132);
  CHECK(moebius(Partition({1})) == 1);
  CHECK(moebius(Partition({2})) == -1);
  CHECK(moebius(Partition({3})) == 2);
  CHECK(moebius(Partition({2, 2})) == 1);
  // multiplicative over disjoint cycles by construction
  CHECK(moebius(Partition({3, 2, 2})) ==
        moebius(Partition({3})) * moebius(Partition({2})) * moebius(Partition({2})));

  // n^{k+|sigma|} Wg -> Moeb: the exact ratio sits within O(n^{-2}) of 1
  const auto t4 = wg_unitary_gram(4, TableMode::symbolic());
  for (const auto& type : Partition::all(4)) {
    const BigRational big(1000000);
    const BigRational ratio = asymptotic_ratio(t4, type, big);
    CHECK((ratio - BigRational(1)).abs() < BigRational(1, 100000));
  }
}

TEST_CASE("uniform bound report at n0 = 2k^2") {
  const auto t3 = wg_unitary_gram(3, TableMode::symbolic());
  const auto rep = uniform_bound_check(t3, BigRational(18));
  CHECK(rep.ok());
  for (const auto& row : rep.rows) {
    CHECK(row.lower_ok);
    // 18^4 = 104976 > 36 * 3^7 = 78732, so the upper bound applies
    CHECK(row.upper_applicable);
    CHECK(row.upper_ok);
  }
  // the lower bound needs n0 >= k
  CHECK_THROWS_AS(uniform_bound_check(t3, BigRational(2)), std::invalid_argument);
}

TEST_CASE("almost multiplicativity defect decays with the dimension") {
  // sigma = (1 2)(3 4 5): compare Wg_5 against Wg_2 Wg_3 on the parts
  const auto t5 = wg_unitary_gram(5, TableMode::symbolic());
  const auto t2 = wg_unitary_gram(2, TableMode::symbolic());
  const auto t3 = wg_unitary_gram(3, TableMode::symbolic());
  const auto defect = [&](const BigRational& n0) {
    const BigRational joint = t5.value(Partition({3, 2})).evaluate_at(n0);
    const BigRational split = t2.value(Partition({2})).evaluate_at(n0) *
                              t3.value(Partition({3})).evaluate_at(n0);
    return (joint / split - BigRational(1)).abs();
  };
  const BigRational base(2 * 5 * 5);
  CHECK(BigRational(3) * defect(base * BigRational(2)) <= defect(base));
}

TEST_CASE("absolute values decrease on integer dimensions above the degree") {
  for (int k = 2; k <= 4; ++k) {
    const auto table = wg_unitary_gram(k, TableMode::symbolic());
    for (const auto& [type, value] : table.class_values()) {
      for (long n0 = k + 1; n0 < 4 * k; ++n0) {
        const BigRational here = value.evaluate_at(BigRational(n0)).abs();
        const BigRational next = value.evaluate_at(BigRational(n0 + 1)).abs();
        CHECK(next <= here);
      }
    }
  }
}

TEST_CASE("caps and validity guards") {
  CHECK_THROWS_AS(wg_unitary_gram(8, TableMode::symbolic()), CapError);
  CHECK_THROWS_AS(wg_unitary_character(9, TableMode::symbolic()), CapError);
  CHECK_THROWS_AS(wg_orthogonal(12, TableMode::symbolic()), CapError);
  CHECK_THROWS_AS(wg_free(14, TableMode::symbolic()), CapError);
  CHECK_THROWS_AS(wg_orthogonal(3, TableMode::symbolic()), std::invalid_argument);

  const auto t3 = wg_unitary_gram(3, TableMode::symbolic());
  const auto sigma = Permutation(3);
  CHECK_THROWS_AS(t3.evaluate(sigma, BigRational(2)), PoleError);
  CHECK_THROWS_AS(t3.evaluate(sigma, BigRational(-1)), PoleError);
  CHECK(t3.evaluate(sigma, BigRational(5, 2)) ==
        t3.value(sigma).evaluate_at(BigRational(5, 2)));

  // numeric tables only answer at their own point
  const auto tn = wg_unitary_gram(3, TableMode::at(BigRational(7)));
  CHECK_THROWS_AS(tn.evaluate(sigma, BigRational(8)), std::invalid_argument);
  CHECK(tn.evaluate(sigma, BigRational(7)) == tn.value(sigma).constant_value());

  CHECK(TableMode::parse("symbolic").is_symbolic());
  CHECK(TableMode::parse("n=5/2") == TableMode::at(BigRational(5, 2)));
  CHECK(group_from_name("unitary") == GroupKind::Unitary);
  CHECK(group_from_name("free") == GroupKind::FreeOrthogonal);
  CHECK_THROWS_AS(group_from_name("banana"), ParseError);
}
