#include "haarwell/integrate.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "haarwell/errors.hpp"
#include "haarwell/pairings.hpp"

namespace haarwell {
namespace {

// Cycle type of tau . sigma^{-1} without building the composite.
Partition composite_type(const Permutation& tau, const std::vector<int>& sigma_inv) {
  const int k = static_cast<int>(sigma_inv.size());
  std::vector<bool> seen(static_cast<size_t>(k), false);
  std::vector<int> lens;
  for (int i = 1; i <= k; ++i) {
    if (seen[static_cast<size_t>(i - 1)]) continue;
    int len = 0, j = i;
    while (!seen[static_cast<size_t>(j - 1)]) {
      seen[static_cast<size_t>(j - 1)] = true;
      j = tau(sigma_inv[static_cast<size_t>(j - 1)]);
      ++len;
    }
    lens.push_back(len);
  }
  return Partition(std::move(lens));
}

RationalFunction integrate_unitary(const MomentQuery& query, const WeingartenTable& table) {
  std::vector<int> ri, ci, rj, cj;  // plain rows/cols, conjugated rows/cols
  for (const auto& f : query.factors) {
    if (f.conjugated) {
      rj.push_back(f.row);
      cj.push_back(f.col);
    } else {
      ri.push_back(f.row);
      ci.push_back(f.col);
    }
  }
  const int k = static_cast<int>(ri.size());
  if (k == 0) return RationalFunction(1);

  const auto perms = Permutation::enumerate(k);
  std::vector<const Permutation*> row_valid, col_valid;
  for (const auto& s : perms) {
    bool rok = true, cok = true;
    for (int p = 1; p <= k; ++p) {
      if (ri[static_cast<size_t>(p - 1)] != rj[static_cast<size_t>(s(p) - 1)]) rok = false;
      if (ci[static_cast<size_t>(p - 1)] != cj[static_cast<size_t>(s(p) - 1)]) cok = false;
      if (!rok && !cok) break;
    }
    if (rok) row_valid.push_back(&s);
    if (cok) col_valid.push_back(&s);
  }

  std::map<Partition, long> weight;
  for (const Permutation* sigma : row_valid) {
    std::vector<int> sinv(static_cast<size_t>(k));
    for (int x = 1; x <= k; ++x) sinv[static_cast<size_t>((*sigma)(x)-1)] = x;
    for (const Permutation* tau : col_valid) ++weight[composite_type(*tau, sinv)];
  }
  RationalFunction acc;
  for (const auto& [type, count] : weight)
    acc += RationalFunction(BigRational(count)) * table.value(type);
  return acc;
}

RationalFunction integrate_pairings(const MomentQuery& query, const WeingartenTable& table) {
  std::vector<int> rows, cols;
  for (const auto& f : query.factors) {
    rows.push_back(f.row);
    cols.push_back(f.col);
  }
  const int k = static_cast<int>(rows.size());
  const auto all = query.group == GroupKind::Orthogonal
                       ? PairPartition::enumerate(k)
                       : PairPartition::enumerate_noncrossing(k);
  std::vector<const PairPartition*> row_valid, col_valid;
  for (const auto& p : all) {
    if (pairing_delta(p, rows)) row_valid.push_back(&p);
    if (pairing_delta(p, cols)) col_valid.push_back(&p);
  }
  RationalFunction acc;
  for (const PairPartition* pi : row_valid)
    for (const PairPartition* rho : col_valid) acc += table.value(*pi, *rho);
  return acc;
}

void check_query(const MomentQuery& query) {
  for (const auto& f : query.factors)
    if (f.row < 1 || f.col < 1)
      throw std::invalid_argument("matrix indices are 1-based and positive");
  if (!query.mode.is_symbolic() &&
      BigRational(query.min_dimension()) > query.mode.n0())
    throw std::invalid_argument("monomial references entries outside an n=" +
                                query.mode.n0().to_string() + " matrix");
}

}  // namespace

std::vector<MonomialFactor> parse_monomial(const std::string& text) {
  std::vector<MonomialFactor> out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    MonomialFactor f;
    std::string body = tok;
    if (!body.empty() && body[0] == '~') {
      f.conjugated = true;
      body = body.substr(1);
    }
    if (body.size() < 6 || body.rfind("u[", 0) != 0 || body.back() != ']')
      throw ParseError("bad monomial factor '" + tok + "', expected u[i,j] or ~u[i,j]");
    const std::string inner = body.substr(2, body.size() - 3);
    const size_t comma = inner.find(',');
    if (comma == std::string::npos)
      throw ParseError("bad monomial factor '" + tok + "', expected u[i,j] or ~u[i,j]");
    try {
      size_t used = 0;
      f.row = std::stoi(inner.substr(0, comma), &used);
      if (used != comma) throw std::invalid_argument("");
      f.col = std::stoi(inner.substr(comma + 1), &used);
      if (used != inner.size() - comma - 1) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw ParseError("bad indices in monomial factor '" + tok + "'");
    }
    if (f.row < 1 || f.col < 1)
      throw ParseError("indices in '" + tok + "' must be >= 1");
    out.push_back(f);
  }
  if (out.empty()) throw ParseError("empty monomial");
  return out;
}

std::string monomial_to_string(const std::vector<MonomialFactor>& factors) {
  std::string out;
  for (const auto& f : factors) {
    if (!out.empty()) out += " ";
    if (f.conjugated) out += "~";
    out += "u[" + std::to_string(f.row) + "," + std::to_string(f.col) + "]";
  }
  return out;
}

int MomentQuery::min_dimension() const {
  int m = 1;
  for (const auto& f : factors) m = std::max({m, f.row, f.col});
  return m;
}

bool unbalanced_zero(const MomentQuery& query) {
  if (query.group != GroupKind::Unitary) return false;
  long bal = 0;
  for (const auto& f : query.factors) bal += f.conjugated ? -1 : 1;
  return bal != 0;
}

RationalFunction integrate(const MomentQuery& query) {
  check_query(query);
  if (query.factors.empty()) return RationalFunction(1);
  if (unbalanced_zero(query)) return RationalFunction();
  const int deg = static_cast<int>(query.factors.size());
  if (query.group == GroupKind::Unitary)
    return integrate_unitary(query, wg_unitary_gram(deg / 2, query.mode));
  if (deg % 2 != 0) return RationalFunction();  // odd moments vanish
  const auto table = query.group == GroupKind::Orthogonal
                         ? wg_orthogonal(deg, query.mode)
                         : wg_free(deg, query.mode);
  return integrate_pairings(query, table);
}

RationalFunction integrate(const MomentQuery& query, const WeingartenTable& table) {
  check_query(query);
  if (table.group() != query.group || !(table.mode() == query.mode))
    throw std::invalid_argument("table does not match the query");
  if (query.factors.empty()) return RationalFunction(1);
  if (unbalanced_zero(query)) return RationalFunction();
  const int deg = static_cast<int>(query.factors.size());
  if (query.group == GroupKind::Unitary) {
    if (table.degree() != deg / 2) throw std::invalid_argument("table degree mismatch");
    return integrate_unitary(query, table);
  }
  if (deg % 2 != 0) return RationalFunction();
  if (table.degree() != deg) throw std::invalid_argument("table degree mismatch");
  return integrate_pairings(query, table);
}

}  // namespace haarwell
