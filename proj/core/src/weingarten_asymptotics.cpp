#include <stdexcept>
#include <vector>

#include "haarwell/errors.hpp"
#include "haarwell/weingarten.hpp"

namespace haarwell {
namespace {

constexpr size_t kReportCap = 16;

}  // namespace

BigInt catalan_number(int m) {
  if (m < 0) throw std::invalid_argument("catalan index must be >= 0");
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(2 * m),
               static_cast<unsigned long>(m));
  return b / (m + 1);
}

BigInt moebius(const CycleType& type) {
  BigInt out(1);
  for (int p = 0; p < type.count(); ++p) {
    const int len = type.part(p);
    const BigInt c = catalan_number(len - 1);
    out *= (len % 2 == 0) ? -c : c;
  }
  return out;
}

BigRational asymptotic_ratio(const WeingartenTable& table, const CycleType& type,
                             const BigRational& n0) {
  if (table.group() != GroupKind::Unitary)
    throw std::invalid_argument("asymptotic ratio is defined for unitary tables");
  const int k = table.degree();
  if (type.sum() != k) throw std::invalid_argument("cycle type degree mismatch");
  const int length = k - type.count();  // minimal transposition count
  const BigRational wg = table.evaluate(Permutation::from_cycle_type(type, k), n0);
  return BigRational::pow(n0, k + length) * wg / BigRational(moebius(type));
}

UniformBoundReport uniform_bound_check(const WeingartenTable& table, const BigRational& n0) {
  if (table.group() != GroupKind::Unitary || !table.mode().is_symbolic())
    throw std::invalid_argument("bound check needs a symbolic unitary table");
  if (!n0.is_integer() || n0 < BigRational(table.degree()))
    throw std::invalid_argument("bound check needs an integer n0 >= k");

  const int k = table.degree();
  UniformBoundReport rep;
  rep.k = k;
  rep.n0 = n0;
  const BigRational n0sq = n0 * n0;
  // lower: ratio (1 - (k-1)/n0^2) >= 1, valid for all n0 >= k
  const BigRational lower_factor = BigRational(1) - BigRational(k - 1) / n0sq;
  // upper applies once n0^4 > 36 k^7; the irrational constant 6 k^{7/2} is
  // compared through its square
  const BigInt k7 = BigInt(36) * BigRational::pow(BigRational(k), 7).num();
  const bool upper_applicable = (n0sq * n0sq) > BigRational(k7);

  for (const auto& [type, unused] : table.class_values()) {
    (void)unused;
    BoundCheckRow row;
    row.type = type;
    row.ratio = asymptotic_ratio(table, type, n0);
    row.lower_ok = row.ratio * lower_factor >= BigRational(1);
    row.upper_applicable = upper_applicable;
    if (upper_applicable) {
      if (row.ratio <= BigRational(1)) {
        row.upper_ok = true;
      } else {
        // ratio <= 1/(1 - 6 k^{7/2}/n0^2)  <=>  [n0^2 (ratio-1)/ratio]^2 <= 36 k^7
        const BigRational lhs = n0sq * (row.ratio - BigRational(1)) / row.ratio;
        row.upper_ok = lhs * lhs <= BigRational(k7);
      }
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

FreeSignSurveyReport free_sign_survey(int k, const std::vector<BigRational>& samples) {
  if (samples.empty()) throw std::invalid_argument("sign survey needs at least one sample");
  for (size_t s = 0; s < samples.size(); ++s) {
    if (samples[s] < BigRational(2))
      throw std::invalid_argument("sign survey samples must be >= 2");
    if (s > 0 && !(samples[s - 1] < samples[s]))
      throw std::invalid_argument("sign survey samples must be strictly ascending");
  }

  FreeSignSurveyReport rep;
  rep.k = k;
  rep.samples = samples;

  std::vector<Matrix<BigRational>> tables;
  std::vector<PairPartition> basis;
  for (const auto& n0 : samples) {
    const auto t = wg_free(k, TableMode::at(n0));
    if (basis.empty()) basis = t.pairing_basis();
    tables.push_back(evaluate_matrix(t.pairing_values(), n0));
  }

  const int b = static_cast<int>(basis.size());
  const auto label = [&](int i, int j, size_t s) {
    return basis[static_cast<size_t>(i)].to_string() + "|" +
           basis[static_cast<size_t>(j)].to_string() + "@n=" + samples[s].to_string();
  };
  for (int i = 0; i < b; ++i)
    for (int j = 0; j < b; ++j) {
      ++rep.entries_checked;
      const int sign0 = tables[0](i, j).sign();
      if (sign0 > 0) ++rep.positive_entries;
      if (sign0 < 0) ++rep.negative_entries;
      for (size_t s = 0; s < samples.size(); ++s) {
        const BigRational& v = tables[s](i, j);
        if (v.is_zero() && rep.zero_entries.size() < kReportCap)
          rep.zero_entries.push_back(label(i, j, s));
        if (s > 0) {
          const BigRational& prev = tables[s - 1](i, j);
          if (abs(v) > abs(prev) && rep.monotonicity_violations.size() < kReportCap)
            rep.monotonicity_violations.push_back(label(i, j, s));
          if (v.sign() != 0 && prev.sign() != 0 && v.sign() != prev.sign() &&
              rep.sign_flips.size() < kReportCap)
            rep.sign_flips.push_back(label(i, j, s));
        }
      }
    }
  return rep;
}

}  // namespace haarwell
