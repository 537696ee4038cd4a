#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "haarwell/errors.hpp"
#include "haarwell/pairings.hpp"
#include "haarwell/permutation.hpp"

using namespace haarwell;

namespace {

long double_factorial(int k) {  // (k-1)!! for even k
  long r = 1;
  for (int m = k - 1; m > 0; m -= 2) r *= m;
  return r;
}

}  // namespace

TEST_CASE("pairings parse and canonicalize") {
  const auto p = PairPartition::parse("{3,4}{2,1}", 4);
  CHECK(p == PairPartition::parse("{1,2} {3,4}", 4));
  CHECK(p.to_string() == "{1,2}{3,4}");
  CHECK(p.partner(1) == 2);
  CHECK(p.partner(4) == 3);
  CHECK(p == PairPartition::identity(4));
  CHECK_THROWS_AS(PairPartition::parse("{1,2}{3,3}", 4), ParseError);
  CHECK_THROWS_AS(PairPartition::parse("{1,2}", 4), ParseError);
}

TEST_CASE("enumeration counts pairings and noncrossing pairings") {
  const long catalan[] = {1, 1, 2, 5, 14, 42};
  for (int k = 2; k <= 10; k += 2) {
    const auto all = PairPartition::enumerate(k);
    CHECK(static_cast<long>(all.size()) == double_factorial(k));
    const auto nc = PairPartition::enumerate_noncrossing(k);
    CHECK(static_cast<long>(nc.size()) == catalan[k / 2]);
    for (const auto& q : nc) CHECK(q.is_noncrossing());
    long found = 0;
    for (const auto& q : all)
      if (q.is_noncrossing()) ++found;
    CHECK(found == static_cast<long>(nc.size()));
  }
  CHECK(PairPartition::enumerate(3).empty());
}

TEST_CASE("crossing detection") {
  CHECK(PairPartition::parse("{1,2}{3,4}", 4).is_noncrossing());
  CHECK(PairPartition::parse("{1,4}{2,3}", 4).is_noncrossing());
  CHECK_FALSE(PairPartition::parse("{1,3}{2,4}", 4).is_noncrossing());
}

TEST_CASE("loops against brute-force delta sums") {
  // sum over words of prod deltas = n^{loops(pi, rho)}
  const int n = 3;
  for (int k = 2; k <= 6; k += 2) {
    const auto all = PairPartition::enumerate(k);
    for (const auto& pi : all)
      for (const auto& rho : all) {
        long long total = 0;
        MultiIndex word(k, 1);
        while (true) {
          if (pairing_delta(pi, word) && pairing_delta(rho, word)) ++total;
          int pos = k - 1;
          while (pos >= 0 && word[pos] == n) word[pos--] = 1;
          if (pos < 0) break;
          ++word[pos];
        }
        long long expect = 1;
        for (int l = 0; l < loops(pi, rho); ++l) expect *= n;
        CHECK(total == expect);
      }
  }
}

TEST_CASE("loop types refine loop counts") {
  const auto all = PairPartition::enumerate(6);
  for (const auto& pi : all)
    for (const auto& rho : all) {
      const auto type = loop_type(pi, rho);
      CHECK(type.sum() == 3);
      CHECK(type.count() == loops(pi, rho));
    }
  // maximal loops iff equal
  const auto id = PairPartition::identity(6);
  for (const auto& rho : all)
    CHECK((loops(id, rho) == 3) == (rho == id));
}

TEST_CASE("permutations embed into pairings with loops = cycles") {
  for (int kp = 1; kp <= 4; ++kp) {
    for (const auto& sigma : Permutation::enumerate(kp)) {
      const auto img = pairing_from_permutation(sigma);
      CHECK(img.points() == 2 * kp);
      for (const auto& tau : Permutation::enumerate(kp)) {
        const auto img2 = pairing_from_permutation(tau);
        // loops of the two images = cycle count of tau sigma^{-1}
        CHECK(loops(img, img2) == compose(tau, sigma.inverse()).cycle_count());
      }
    }
  }
  const auto pairs = unitary_pairings(3);
  CHECK(pairs.size() == 6);
  for (const auto& [pp, perm] : pairs) CHECK(pp == pairing_from_permutation(perm));
}
