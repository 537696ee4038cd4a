#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "haarwell/characters.hpp"
#include "haarwell/errors.hpp"
#include "haarwell/weingarten.hpp"

namespace haarwell {
namespace {

constexpr int kGramCap = 7;
constexpr int kCharacterCap = 8;
constexpr int kRecursionCap = 6;

struct ClassData {
  int k = 0;
  std::vector<Partition> classes;
  std::map<Partition, int> index;
  std::vector<Permutation> reps;
  int identity_class = -1;
};

ClassData make_class_data(int k) {
  ClassData cd;
  cd.k = k;
  cd.classes = Partition::all(k);
  for (int i = 0; i < static_cast<int>(cd.classes.size()); ++i)
    cd.index.emplace(cd.classes[static_cast<size_t>(i)], i);
  cd.reps.reserve(cd.classes.size());
  for (const auto& c : cd.classes) cd.reps.push_back(Permutation::from_cycle_type(c, k));
  cd.identity_class = cd.index.at(Partition(std::vector<int>(static_cast<size_t>(k), 1)));
  return cd;
}

// counts[nu][mu][c] = #{ rho in class mu : #cycles(rho^{-1} tau_nu) = c }.
// The matrix sum_c counts[nu][mu][c] n^c is multiplication by the Gram
// element sum_sigma n^{#cycles(sigma)} lambda_sigma on the class-sum basis;
// solving A w = e_{identity class} for the per-element coefficients w is the
// full k! x k! inverse-Gram system grouped by conjugacy class.
using GramCounts = std::vector<std::vector<std::vector<long>>>;

GramCounts compressed_counts(const ClassData& cd) {
  const int p = static_cast<int>(cd.classes.size());
  GramCounts counts(
      static_cast<size_t>(p),
      std::vector<std::vector<long>>(static_cast<size_t>(p),
                                     std::vector<long>(static_cast<size_t>(cd.k + 1), 0)));
  for (const auto& rho : Permutation::enumerate(cd.k)) {
    const int mu = cd.index.at(rho.cycle_type());
    const Permutation rinv = rho.inverse();
    for (int nu = 0; nu < p; ++nu) {
      const int c = compose(rinv, cd.reps[static_cast<size_t>(nu)]).cycle_count();
      ++counts[static_cast<size_t>(nu)][static_cast<size_t>(mu)][static_cast<size_t>(c)];
    }
  }
  return counts;
}

Matrix<RationalFunction> counts_to_symbolic(const GramCounts& counts, int k) {
  const int p = static_cast<int>(counts.size());
  Matrix<RationalFunction> a(p, p);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) {
      std::vector<BigInt> coeffs(static_cast<size_t>(k + 1));
      for (int c = 0; c <= k; ++c)
        coeffs[static_cast<size_t>(c)] =
            BigInt(counts[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(c)]);
      a(i, j) = RationalFunction(IntPolynomial::from_coeffs(std::move(coeffs)));
    }
  return a;
}

Matrix<BigRational> counts_to_numeric(const GramCounts& counts, int k, const BigRational& n0) {
  std::vector<BigRational> pw(static_cast<size_t>(k + 1));
  pw[0] = BigRational(1);
  for (int c = 1; c <= k; ++c) pw[static_cast<size_t>(c)] = pw[static_cast<size_t>(c - 1)] * n0;
  const int p = static_cast<int>(counts.size());
  Matrix<BigRational> a(p, p);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) {
      BigRational s;
      for (int c = 0; c <= k; ++c) {
        const long m = counts[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(c)];
        if (m != 0) s += BigRational(m) * pw[static_cast<size_t>(c)];
      }
      a(i, j) = s;
    }
  return a;
}

std::vector<BigRational> mat_vec(const Matrix<BigRational>& a, const std::vector<BigRational>& v) {
  std::vector<BigRational> out(static_cast<size_t>(a.rows()));
  for (int i = 0; i < a.rows(); ++i) {
    BigRational s;
    for (int j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero() && !v[static_cast<size_t>(j)].is_zero())
        s += a(i, j) * v[static_cast<size_t>(j)];
    out[static_cast<size_t>(i)] = s;
  }
  return out;
}

// Coefficients c with vs[j] = sum_i c_i vs[i], if vs[j] lies in the span of
// vs[0..j-1]. The first dependent j gives the minimal polynomial.
std::optional<std::vector<BigRational>> in_span(const std::vector<std::vector<BigRational>>& vs,
                                                int j) {
  const int p = static_cast<int>(vs[0].size());
  Matrix<BigRational> aug(p, j + 1);
  for (int r = 0; r < p; ++r) {
    for (int c = 0; c < j; ++c) aug(r, c) = vs[static_cast<size_t>(c)][static_cast<size_t>(r)];
    aug(r, j) = vs[static_cast<size_t>(j)][static_cast<size_t>(r)];
  }
  const auto rr = reduced_row_echelon(aug);
  for (int col : rr.pivot_cols)
    if (col == j) return std::nullopt;
  std::vector<BigRational> x(static_cast<size_t>(j));
  for (size_t r = 0; r < rr.pivot_cols.size(); ++r)
    x[static_cast<size_t>(rr.pivot_cols[r])] = rr.rref(static_cast<int>(r), j);
  return x;
}

using QPoly = std::vector<BigRational>;  // little-endian

QPoly qp_mul(const QPoly& a, const QPoly& b) {
  QPoly out(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

QPoly qp_shift(QPoly a, size_t s) {
  a.insert(a.begin(), s, BigRational());
  return a;
}

std::map<Partition, RationalFunction> wrap_numeric(const ClassData& cd,
                                                   const std::vector<BigRational>& w) {
  std::map<Partition, RationalFunction> values;
  for (size_t mu = 0; mu < cd.classes.size(); ++mu)
    values.emplace(cd.classes[mu], RationalFunction(w[mu]));
  return values;
}

std::map<Partition, RationalFunction> solve_symbolic(const ClassData& cd,
                                                     const GramCounts& counts) {
  const auto a = counts_to_symbolic(counts, cd.k);
  const auto inv = bareiss_inverse(a);
  std::map<Partition, RationalFunction> values;
  for (size_t mu = 0; mu < cd.classes.size(); ++mu)
    values.emplace(cd.classes[mu], inv(static_cast<int>(mu), cd.identity_class));
  return values;
}

std::map<Partition, RationalFunction> solve_numeric_regular(const ClassData& cd,
                                                            const Matrix<BigRational>& a) {
  const auto inv = bareiss_inverse(a);
  std::vector<BigRational> w(cd.classes.size());
  for (size_t mu = 0; mu < cd.classes.size(); ++mu)
    w[mu] = inv(static_cast<int>(mu), cd.identity_class);
  return wrap_numeric(cd, w);
}

// Singular Gram (integer n0 < k). The Moore-Penrose pseudo-inverse is a
// polynomial in the Gram element: with minimal polynomial m(x) = x q(x)
// (x = 0 simple because the element is diagonalizable), q = q0 + x r(x), the
// support projection is P = 1 - q(G)/q0 and H = (-1/q0) r(G) P. Everything
// is computed on Krylov coordinates of the identity and the Penrose
// identities G H G = G, H G H = H are verified exactly before returning.
std::map<Partition, RationalFunction> solve_numeric_pseudo(const ClassData& cd,
                                                           const Matrix<BigRational>& a) {
  const int p = static_cast<int>(cd.classes.size());
  std::vector<std::vector<BigRational>> vs;
  std::vector<BigRational> v0(static_cast<size_t>(p));
  v0[static_cast<size_t>(cd.identity_class)] = BigRational(1);
  vs.push_back(v0);

  int d = -1;
  std::vector<BigRational> rel;
  for (int j = 1; j <= p; ++j) {
    vs.push_back(mat_vec(a, vs.back()));
    if (auto sol = in_span(vs, j)) {
      d = j;
      rel = *sol;
      break;
    }
  }
  if (d < 0) throw std::logic_error("weingarten: no polynomial relation in class algebra");

  QPoly m(static_cast<size_t>(d + 1));
  m[static_cast<size_t>(d)] = BigRational(1);
  for (int i = 0; i < d; ++i) m[static_cast<size_t>(i)] = -rel[static_cast<size_t>(i)];

  if (!m[0].is_zero()) return solve_numeric_regular(cd, a);  // invertible after all
  if (d >= 2 && m[1].is_zero())
    throw std::logic_error("weingarten: gram element not diagonalizable");

  QPoly q(m.begin() + 1, m.end());  // m = x q
  const BigRational q0 = q[0];
  QPoly r(q.begin() + 1, q.end());  // q = q0 + x r

  // P = 1 - q/q0, H = (-1/q0) r P
  QPoly pp(q.size());
  for (size_t i = 0; i < q.size(); ++i) pp[i] = -(q[i] / q0);
  pp[0] += BigRational(1);
  QPoly h = qp_mul(r, pp);
  for (auto& c : h) c = -(c / q0);

  auto apply = [&vs, &a](const QPoly& poly) {
    while (vs.size() < poly.size()) vs.push_back(mat_vec(a, vs.back()));
    std::vector<BigRational> out(vs[0].size());
    for (size_t j = 0; j < poly.size(); ++j) {
      if (poly[j].is_zero()) continue;
      for (size_t i = 0; i < out.size(); ++i) out[i] += poly[j] * vs[j][i];
    }
    return out;
  };

  const auto w = apply(h);
  // apply() may grow vs and reallocate, so finish each call before indexing.
  const auto ghg = apply(qp_shift(h, 2));
  if (ghg != vs[1])
    throw std::logic_error("weingarten: pseudo-inverse check G H G = G failed");
  const auto hgh = apply(qp_shift(qp_mul(h, h), 1));
  if (hgh != w)
    throw std::logic_error("weingarten: pseudo-inverse check H G H = H failed");

  return wrap_numeric(cd, w);
}

void require_integer_dimension(const BigRational& n0, const char* who) {
  if (!n0.is_integer() || n0.sign() <= 0)
    throw std::invalid_argument(std::string(who) + " needs an integer n0 >= 1");
}

Permutation restrict_fixing_one(const Permutation& sigma) {
  const int k = sigma.degree();
  std::vector<int> word(static_cast<size_t>(k - 1));
  for (int i = 2; i <= k; ++i) word[static_cast<size_t>(i - 2)] = sigma(i) - 1;
  return Permutation::from_one_line(word);
}

}  // namespace

WeingartenTable wg_unitary_gram(int k, const TableMode& mode) {
  if (k < 1) throw std::invalid_argument("degree must be >= 1");
  if (k > kGramCap) throw CapError("unitary gram path capped at k <= 7");
  const ClassData cd = make_class_data(k);
  const GramCounts counts = compressed_counts(cd);
  if (mode.is_symbolic())
    return WeingartenTable::class_table(GroupKind::Unitary, k, mode,
                                        solve_symbolic(cd, counts));
  require_integer_dimension(mode.n0(), "unitary numeric mode");
  const auto a = counts_to_numeric(counts, k, mode.n0());
  auto values = mode.n0() >= BigRational(k) ? solve_numeric_regular(cd, a)
                                            : solve_numeric_pseudo(cd, a);
  return WeingartenTable::class_table(GroupKind::Unitary, k, mode, std::move(values));
}

WeingartenTable wg_unitary_character(int k, const TableMode& mode) {
  if (k < 1) throw std::invalid_argument("degree must be >= 1");
  if (k > kCharacterCap) throw CapError("unitary character path capped at k <= 8");
  const auto lambdas = Partition::all(k);
  const auto classes = Partition::all(k);
  const BigInt kfact = factorial(k);
  const BigRational norm(BigInt(1), kfact * kfact);

  std::map<Partition, RationalFunction> values;
  if (mode.is_symbolic()) {
    std::vector<RationalFunction> dim_inv;
    std::vector<BigInt> fsq;
    for (const auto& lam : lambdas) {
      dim_inv.push_back(RationalFunction(1) / dimension_un(lam));
      const BigInt f = dimension_sn(lam);
      fsq.push_back(f * f);
    }
    for (const auto& mu : classes) {
      RationalFunction acc;
      for (size_t li = 0; li < lambdas.size(); ++li) {
        const BigInt chi = character(lambdas[li], mu);
        if (chi == 0) continue;
        acc += RationalFunction(norm * BigRational(fsq[li] * chi)) * dim_inv[li];
      }
      values.emplace(mu, acc);
    }
  } else {
    require_integer_dimension(mode.n0(), "unitary numeric mode");
    const BigRational& n0 = mode.n0();
    std::vector<size_t> kept;
    std::vector<BigRational> dim_inv;
    std::vector<BigInt> fsq;
    for (size_t li = 0; li < lambdas.size(); ++li) {
      if (BigRational(lambdas[li].count()) > n0) continue;  // diagram taller than n0
      const BigRational dim = dimension_un(lambdas[li]).evaluate_at(n0);
      if (dim.is_zero()) throw std::logic_error("weingarten: kept diagram has zero dimension");
      kept.push_back(li);
      dim_inv.push_back(BigRational(1) / dim);
      const BigInt f = dimension_sn(lambdas[li]);
      fsq.push_back(f * f);
    }
    for (const auto& mu : classes) {
      BigRational acc;
      for (size_t i = 0; i < kept.size(); ++i) {
        const BigInt chi = character(lambdas[kept[i]], mu);
        if (chi == 0) continue;
        acc += norm * BigRational(fsq[i] * chi) * dim_inv[i];
      }
      values.emplace(mu, RationalFunction(acc));
    }
  }
  return WeingartenTable::class_table(GroupKind::Unitary, k, mode, std::move(values));
}

std::vector<BigInt> wg_unitary_series(const Permutation& sigma, int order, int max_order) {
  return monotone_count_profile(sigma, order, max_order);
}

BigRational wg_series_truncation(const std::vector<BigInt>& counts, int k,
                                 const BigRational& n0) {
  if (n0.sign() <= 0) throw std::invalid_argument("series evaluation needs n0 > 0");
  const BigRational step = BigRational(-1) / n0;
  BigRational acc;
  BigRational pw(1);
  for (const auto& c : counts) {
    if (c != 0) acc += BigRational(c) * pw;
    pw *= step;
  }
  return acc / BigRational::pow(n0, k);
}

Matrix<RationalFunction> unitary_gram_matrix(int k) {
  const auto perms = Permutation::enumerate(k);
  const int m = static_cast<int>(perms.size());
  Matrix<RationalFunction> g(m, m);
  for (int i = 0; i < m; ++i) {
    const Permutation inv = perms[static_cast<size_t>(i)].inverse();
    for (int j = 0; j < m; ++j) {
      const int c = compose(perms[static_cast<size_t>(j)], inv).cycle_count();
      g(i, j) = RationalFunction(IntPolynomial::monomial(BigInt(1), c));
    }
  }
  return g;
}

Matrix<BigRational> unitary_gram_matrix_at(int k, const BigRational& n0) {
  const auto perms = Permutation::enumerate(k);
  const int m = static_cast<int>(perms.size());
  Matrix<BigRational> g(m, m);
  for (int i = 0; i < m; ++i) {
    const Permutation inv = perms[static_cast<size_t>(i)].inverse();
    for (int j = 0; j < m; ++j) {
      const int c = compose(perms[static_cast<size_t>(j)], inv).cycle_count();
      g(i, j) = BigRational::pow(n0, c);
    }
  }
  return g;
}

RecursionCheckReport wg_unitary_recursion_check(int k, const TableMode& mode) {
  if (k < 1) throw std::invalid_argument("degree must be >= 1");
  if (k > kRecursionCap) throw CapError("recursion check capped at k <= 6");
  if (!mode.is_symbolic() && mode.n0() < BigRational(k))
    throw PoleError("recursion check needs n0 >= k; the identity is derived there");

  RecursionCheckReport rep;
  rep.k = k;
  rep.mode = mode;

  const WeingartenTable tk = wg_unitary_gram(k, mode);
  std::optional<WeingartenTable> tkm;
  if (k > 1) tkm = wg_unitary_gram(k - 1, mode);
  const RationalFunction nfac = mode.is_symbolic()
                                    ? RationalFunction(IntPolynomial::variable())
                                    : RationalFunction(mode.n0());

  for (const auto& sigma : Permutation::enumerate(k)) {
    RationalFunction lhs = nfac * tk.value(sigma);
    for (int i = 2; i <= k; ++i)
      lhs += tk.value(compose(Permutation::transposition(k, 1, i), sigma));
    RationalFunction rhs;
    if (sigma(1) == 1)
      rhs = (k == 1) ? RationalFunction(1) : tkm->value(restrict_fixing_one(sigma));
    ++rep.checked;
    if (!(lhs == rhs)) {
      ++rep.violations;
      if (rep.failures.size() < 16) rep.failures.push_back(sigma.to_cycle_string());
    }
  }
  return rep;
}

}  // namespace haarwell
