#include <stdexcept>
#include <utility>
#include <vector>

#include "haarwell/errors.hpp"
#include "haarwell/weingarten.hpp"

namespace haarwell {
namespace {

constexpr int kOrthogonalCap = 10;
constexpr int kOrthogonalRawCap = 8;
constexpr int kFreeSymbolicCap = 12;
constexpr int kFreeNumericCap = 16;

void require_even_degree(int k) {
  if (k < 2 || k % 2 != 0)
    throw std::invalid_argument("pairing engines need an even degree k >= 2");
}

// One pairing per loop type relative to the identity pairing {1,2}{3,4}...:
// a part of size m contributes blocks {o+2,o+3},...,{o+2m-2,o+2m-1},{o+2m,o+1}
// which close a single loop of half-length m against the identity blocks.
PairPartition loop_type_representative(const Partition& type, int k) {
  std::vector<std::pair<int, int>> blocks;
  int o = 0;
  for (int p = 0; p < type.count(); ++p) {
    const int m = type.part(p);
    for (int j = 1; j < m; ++j) blocks.emplace_back(o + 2 * j, o + 2 * j + 1);
    blocks.emplace_back(o + 2 * m, o + 1);
    o += 2 * m;
  }
  return PairPartition::from_blocks(blocks, k);
}

std::map<Partition, RationalFunction> orthogonal_raw_pseudo(int k, const BigRational& n0) {
  if (k > kOrthogonalRawCap)
    throw CapError("orthogonal pseudo-inverse fallback capped at k <= 8");
  const auto basis = PairPartition::enumerate(k);
  const PairPartition pi0 = PairPartition::identity(k);
  int row0 = -1;
  for (int i = 0; i < static_cast<int>(basis.size()); ++i)
    if (basis[static_cast<size_t>(i)] == pi0) row0 = i;
  if (row0 < 0) throw std::logic_error("identity pairing missing from enumeration");

  const auto w = pseudo_inverse(pairing_gram_matrix_at(basis, n0));
  std::map<Partition, BigRational> by_type;
  for (int j = 0; j < static_cast<int>(basis.size()); ++j) {
    const Partition t = loop_type(pi0, basis[static_cast<size_t>(j)]);
    const auto it = by_type.find(t);
    if (it == by_type.end())
      by_type.emplace(t, w(row0, j));
    else if (!(it->second == w(row0, j)))
      throw std::logic_error("pseudo-inverse is not constant on loop types");
  }
  std::map<Partition, RationalFunction> values;
  for (auto& [t, v] : by_type) values.emplace(t, RationalFunction(v));
  return values;
}

}  // namespace

Matrix<RationalFunction> pairing_gram_matrix(const std::vector<PairPartition>& basis) {
  const int m = static_cast<int>(basis.size());
  Matrix<RationalFunction> g(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      g(i, j) = RationalFunction(IntPolynomial::monomial(
          BigInt(1), loops(basis[static_cast<size_t>(i)], basis[static_cast<size_t>(j)])));
  return g;
}

Matrix<BigRational> pairing_gram_matrix_at(const std::vector<PairPartition>& basis,
                                           const BigRational& n0) {
  const int m = static_cast<int>(basis.size());
  Matrix<BigRational> g(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      g(i, j) = BigRational::pow(
          n0, loops(basis[static_cast<size_t>(i)], basis[static_cast<size_t>(j)]));
  return g;
}

WeingartenTable wg_orthogonal(int k, const TableMode& mode) {
  require_even_degree(k);
  if (k > kOrthogonalCap) throw CapError("orthogonal engine capped at k <= 10");
  if (!mode.is_symbolic() && (!mode.n0().is_integer() || mode.n0().sign() <= 0))
    throw std::invalid_argument("orthogonal numeric mode needs an integer n0 >= 1");

  const int half = k / 2;
  const auto types = Partition::all(half);
  const int p = static_cast<int>(types.size());
  std::map<Partition, int> index;
  for (int i = 0; i < p; ++i) index.emplace(types[static_cast<size_t>(i)], i);
  std::vector<PairPartition> reps;
  reps.reserve(types.size());
  for (const auto& t : types) reps.push_back(loop_type_representative(t, k));

  // Row pi0 of the inverse-Gram system, grouped by the loop type of the
  // unknown's column; one equation per loop type of the right-hand pairing.
  const PairPartition pi0 = PairPartition::identity(k);
  const auto all = PairPartition::enumerate(k);
  std::vector<int> type_of;
  type_of.reserve(all.size());
  for (const auto& rho : all) type_of.push_back(index.at(loop_type(pi0, rho)));

  const int id_type = index.at(Partition(std::vector<int>(static_cast<size_t>(half), 1)));

  const auto assemble_numeric = [&](const BigRational& n0) {
    Matrix<BigRational> a(p, p);
    for (int nu = 0; nu < p; ++nu)
      for (size_t r = 0; r < all.size(); ++r)
        a(nu, type_of[r]) += BigRational::pow(n0, loops(all[r], reps[static_cast<size_t>(nu)]));
    return a;
  };

  std::map<Partition, RationalFunction> values;
  if (mode.is_symbolic()) {
    Matrix<RationalFunction> a(p, p);
    for (int nu = 0; nu < p; ++nu)
      for (size_t r = 0; r < all.size(); ++r)
        a(nu, type_of[r]) += RationalFunction(
            IntPolynomial::monomial(BigInt(1), loops(all[r], reps[static_cast<size_t>(nu)])));
    const auto inv = bareiss_inverse(a);
    for (int mu = 0; mu < p; ++mu)
      values.emplace(types[static_cast<size_t>(mu)], inv(mu, id_type));
  } else {
    try {
      const auto inv = bareiss_inverse(assemble_numeric(mode.n0()));
      for (int mu = 0; mu < p; ++mu)
        values.emplace(types[static_cast<size_t>(mu)], RationalFunction(inv(mu, id_type)));
    } catch (const SingularMatrixError&) {
      values = orthogonal_raw_pseudo(k, mode.n0());
    }
  }
  return WeingartenTable::class_table(GroupKind::Orthogonal, k, mode, std::move(values));
}

WeingartenTable wg_free(int k, const TableMode& mode) {
  require_even_degree(k);
  if (mode.is_symbolic()) {
    if (k > kFreeSymbolicCap) throw CapError("free symbolic engine capped at k <= 12");
  } else {
    if (k > kFreeNumericCap) throw CapError("free numeric engine capped at k <= 16");
    if (mode.n0() < BigRational(2))
      throw PoleError("free engine valid for n >= 2; requested n=" + mode.n0().to_string());
  }

  auto basis = PairPartition::enumerate_noncrossing(k);
  Matrix<RationalFunction> w;
  if (mode.is_symbolic()) {
    w = bareiss_inverse(pairing_gram_matrix(basis));
  } else {
    const auto inv = bareiss_inverse(pairing_gram_matrix_at(basis, mode.n0()));
    w = Matrix<RationalFunction>(inv.rows(), inv.cols());
    for (int i = 0; i < inv.rows(); ++i)
      for (int j = 0; j < inv.cols(); ++j) w(i, j) = RationalFunction(inv(i, j));
  }
  return WeingartenTable::pairing_table(GroupKind::FreeOrthogonal, k, mode, std::move(basis),
                                        std::move(w));
}

}  // namespace haarwell
