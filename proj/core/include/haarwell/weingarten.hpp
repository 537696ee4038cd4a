#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "haarwell/matrix.hpp"
#include "haarwell/monotone.hpp"
#include "haarwell/pairings.hpp"
#include "haarwell/partitions.hpp"
#include "haarwell/permutation.hpp"
#include "haarwell/rational_function.hpp"

namespace haarwell {

enum class GroupKind { Unitary, Orthogonal, FreeOrthogonal };

std::string group_name(GroupKind g);
GroupKind group_from_name(const std::string& s);

// Symbolic (values are functions of n) or pinned to one exact dimension.
class TableMode {
 public:
  static TableMode symbolic() { return TableMode(); }
  static TableMode at(const BigRational& n0) {
    TableMode m;
    m.n0_ = n0;
    return m;
  }
  bool is_symbolic() const { return !n0_.has_value(); }
  const BigRational& n0() const { return *n0_; }
  std::string to_string() const;  // "symbolic" or "n=5/2"
  static TableMode parse(const std::string& s);
  friend bool operator==(const TableMode& a, const TableMode& b) {
    return a.n0_ == b.n0_;
  }

 private:
  std::optional<BigRational> n0_;
};

// Weingarten weights for one (group, degree, mode).
//
// Unitary values depend on sigma only through its cycle type and Orthogonal
// values on (pi, rho) only through their loop type, so those tables store one
// entry per partition. FreeOrthogonal has no such collapse and stores the
// dense matrix over the noncrossing pairing basis.
class WeingartenTable {
 public:
  GroupKind group() const { return group_; }
  int degree() const { return k_; }
  const TableMode& mode() const { return mode_; }

  // Unitary lookup.
  const RationalFunction& value(const Permutation& sigma) const;
  const RationalFunction& value(const CycleType& type) const;
  // Orthogonal / FreeOrthogonal lookup.
  const RationalFunction& value(const PairPartition& pi, const PairPartition& rho) const;

  // Evaluation with a validity-region guard: symbolic Unitary and Orthogonal
  // tables refuse integer points in [-k+1, k-1] (the Gram matrix degenerates
  // there; the numeric pseudo-inverse mode is the supported path), symbolic
  // FreeOrthogonal refuses n0 < 2. Numeric tables only answer at their own n0.
  BigRational evaluate(const Permutation& sigma, const BigRational& n0) const;
  BigRational evaluate(const PairPartition& pi, const PairPartition& rho,
                       const BigRational& n0) const;

  const std::map<Partition, RationalFunction>& class_values() const;
  const std::vector<PairPartition>& pairing_basis() const;
  const Matrix<RationalFunction>& pairing_values() const;

  static WeingartenTable class_table(GroupKind g, int k, TableMode mode,
                                     std::map<Partition, RationalFunction> values);
  static WeingartenTable pairing_table(GroupKind g, int k, TableMode mode,
                                       std::vector<PairPartition> basis,
                                       Matrix<RationalFunction> values);

 private:
  void check_pole_region(const BigRational& n0) const;

  GroupKind group_ = GroupKind::Unitary;
  int k_ = 0;
  TableMode mode_;
  std::map<Partition, RationalFunction> class_values_;
  std::vector<PairPartition> basis_;
  std::map<PairPartition, int> basis_index_;
  Matrix<RationalFunction> dense_;
};

// ---- Unitary: three independent computation paths -------------------------

// Path 1: invert the Gram operator G = sum_sigma n^{#cycles} lambda_sigma.
// Centrality reduces the k! x k! system to a p(k) x p(k) exact solve; for
// numeric n0 < k the Gram operator is singular and its Moore-Penrose
// pseudo-inverse is taken instead (exact functional calculus on the class
// algebra). Caps: k <= 7; numeric n0 must be a positive integer.
WeingartenTable wg_unitary_gram(int k, const TableMode& mode);

// Path 2: character expansion over partitions of k. For numeric n0 < k the
// sum restricts to diagrams with at most n0 rows. Cap k <= 8.
WeingartenTable wg_unitary_character(int k, const TableMode& mode);

// Path 3: monotone factorization counts #P(sigma, l) for l = 0..order; the
// series n^{-k} sum_l #P(sigma,l) (-1/n)^l converges to the Gram value.
std::vector<BigInt> wg_unitary_series(const Permutation& sigma, int order,
                                      int max_order = kDefaultMaxOrder);
BigRational wg_series_truncation(const std::vector<BigInt>& counts, int k,
                                 const BigRational& n0);

// Raw (uncompressed) Gram matrices, kept as cross-validation oracles.
Matrix<RationalFunction> unitary_gram_matrix(int k);
Matrix<BigRational> unitary_gram_matrix_at(int k, const BigRational& n0);
Matrix<RationalFunction> pairing_gram_matrix(const std::vector<PairPartition>& basis);
Matrix<BigRational> pairing_gram_matrix_at(const std::vector<PairPartition>& basis,
                                           const BigRational& n0);

// Orthogonality recursion: for every sigma in S_k,
//   n Wg(n, sigma) + sum_{i=2..k} Wg(n, (1 i) sigma) = [sigma(1)=1] Wg(n, sigma')
// with sigma' the restriction to {2..k}. Symbolic cap k <= 6; numeric mode
// requires n0 >= k.
struct RecursionCheckReport {
  int k = 0;
  TableMode mode;
  long checked = 0;
  long violations = 0;
  std::vector<std::string> failures;  // cycle strings of violating sigma
  bool ok() const { return violations == 0; }
};
RecursionCheckReport wg_unitary_recursion_check(int k, const TableMode& mode);

// ---- Orthogonal and free orthogonal engines -------------------------------

// Gram inversion over pair partitions, reduced by loop type. k even.
// Cap k <= 10; numeric n0 a positive integer. If the reduced system is
// singular (n0 < k) the raw-matrix pseudo-inverse is used, capped at k <= 8.
WeingartenTable wg_orthogonal(int k, const TableMode& mode);

// Gram inversion over noncrossing pairings. k even. Caps: k <= 12 symbolic,
// k <= 16 numeric; numeric n0 >= 2 (rationals allowed).
WeingartenTable wg_free(int k, const TableMode& mode);

// ---- Asymptotics ----------------------------------------------------------

BigInt catalan_number(int m);

// Moebius weight of a cycle type: product over cycles of
// (-1)^{len-1} Catalan(len-1).
BigInt moebius(const CycleType& type);

// n0^{k+|sigma|} Wg(n0, sigma) / Moeb(sigma), exactly, from a symbolic
// unitary table.
BigRational asymptotic_ratio(const WeingartenTable& table, const CycleType& type,
                             const BigRational& n0);

struct BoundCheckRow {
  Partition type;
  BigRational ratio;
  bool lower_ok = false;        // 1/(1-(k-1)/n0^2) <= ratio, valid for n0 >= k
  bool upper_applicable = false;  // n0^4 > 36 k^7
  bool upper_ok = false;        // ratio <= 1/(1-6 k^{7/2}/n0^2)
};
struct UniformBoundReport {
  int k = 0;
  BigRational n0;
  std::vector<BoundCheckRow> rows;
  bool ok() const {
    for (const auto& r : rows)
      if (!r.lower_ok || (r.upper_applicable && !r.upper_ok)) return false;
    return true;
  }
};
// Requires an integer n0 >= k and a symbolic unitary table of the same degree.
UniformBoundReport uniform_bound_check(const WeingartenTable& table,
                                       const BigRational& n0);

// Numeric survey of the free table over a sample grid (ascending n0 >= 2):
// flags exact zeros, |entry| monotonicity violations along the grid, and sign
// flips between consecutive samples.
struct FreeSignSurveyReport {
  int k = 0;
  std::vector<BigRational> samples;
  long entries_checked = 0;
  std::vector<std::string> zero_entries;
  std::vector<std::string> monotonicity_violations;
  std::vector<std::string> sign_flips;
  long positive_entries = 0;  // at the first sample
  long negative_entries = 0;
  bool ok() const { return zero_entries.empty() && monotonicity_violations.empty(); }
};
FreeSignSurveyReport free_sign_survey(int k, const std::vector<BigRational>& samples);

// ---- Table cache ----------------------------------------------------------

std::string table_cache_filename(GroupKind g, int k, const TableMode& mode);
void save_table(const WeingartenTable& table, const std::string& path);
// Parses and then re-verifies one inverse identity row before returning;
// throws CacheError on any mismatch.
WeingartenTable load_table(const std::string& path);

}  // namespace haarwell
