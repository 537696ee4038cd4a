#include <stdexcept>
#include <utility>

#include "haarwell/errors.hpp"
#include "haarwell/weingarten.hpp"

namespace haarwell {

std::string group_name(GroupKind g) {
  switch (g) {
    case GroupKind::Unitary:
      return "unitary";
    case GroupKind::Orthogonal:
      return "orthogonal";
    case GroupKind::FreeOrthogonal:
      return "free-orthogonal";
  }
  throw std::logic_error("bad group kind");
}

GroupKind group_from_name(const std::string& s) {
  if (s == "unitary" || s == "U") return GroupKind::Unitary;
  if (s == "orthogonal" || s == "O") return GroupKind::Orthogonal;
  if (s == "free-orthogonal" || s == "free" || s == "O+") return GroupKind::FreeOrthogonal;
  throw ParseError("unknown group: " + s);
}

std::string TableMode::to_string() const {
  return is_symbolic() ? "symbolic" : "n=" + n0_->to_string();
}

TableMode TableMode::parse(const std::string& s) {
  if (s == "symbolic") return symbolic();
  if (s.rfind("n=", 0) == 0) return at(BigRational::from_string(s.substr(2)));
  throw ParseError("bad table mode: " + s);
}

WeingartenTable WeingartenTable::class_table(GroupKind g, int k, TableMode mode,
                                             std::map<Partition, RationalFunction> values) {
  if (g == GroupKind::FreeOrthogonal)
    throw std::invalid_argument("free tables are not class tables");
  WeingartenTable t;
  t.group_ = g;
  t.k_ = k;
  t.mode_ = std::move(mode);
  t.class_values_ = std::move(values);
  return t;
}

WeingartenTable WeingartenTable::pairing_table(GroupKind g, int k, TableMode mode,
                                               std::vector<PairPartition> basis,
                                               Matrix<RationalFunction> values) {
  if (g != GroupKind::FreeOrthogonal)
    throw std::invalid_argument("pairing tables are for the free group only");
  if (values.rows() != static_cast<int>(basis.size()) || values.rows() != values.cols())
    throw std::invalid_argument("pairing table shape mismatch");
  WeingartenTable t;
  t.group_ = g;
  t.k_ = k;
  t.mode_ = std::move(mode);
  t.basis_ = std::move(basis);
  for (int i = 0; i < static_cast<int>(t.basis_.size()); ++i)
    t.basis_index_.emplace(t.basis_[static_cast<size_t>(i)], i);
  t.dense_ = std::move(values);
  return t;
}

const RationalFunction& WeingartenTable::value(const Permutation& sigma) const {
  if (group_ != GroupKind::Unitary)
    throw std::invalid_argument("permutation lookup needs a unitary table");
  if (sigma.degree() != k_) throw std::invalid_argument("degree mismatch");
  return value(sigma.cycle_type());
}

const RationalFunction& WeingartenTable::value(const CycleType& type) const {
  if (group_ == GroupKind::FreeOrthogonal)
    throw std::invalid_argument("class lookup on a free table");
  const auto it = class_values_.find(type);
  if (it == class_values_.end())
    throw std::invalid_argument("no table entry for class " + type.to_string());
  return it->second;
}

const RationalFunction& WeingartenTable::value(const PairPartition& pi,
                                               const PairPartition& rho) const {
  if (group_ == GroupKind::Unitary)
    throw std::invalid_argument("pairing lookup on a unitary table");
  if (pi.points() != k_ || rho.points() != k_) throw std::invalid_argument("degree mismatch");
  if (group_ == GroupKind::Orthogonal) return value(loop_type(pi, rho));
  const auto i = basis_index_.find(pi);
  const auto j = basis_index_.find(rho);
  if (i == basis_index_.end() || j == basis_index_.end())
    throw std::invalid_argument("pairing is not noncrossing");
  return dense_(i->second, j->second);
}

void WeingartenTable::check_pole_region(const BigRational& n0) const {
  if (!mode_.is_symbolic()) {
    if (!(n0 == mode_.n0()))
      throw std::invalid_argument("table was built at n=" + mode_.n0().to_string());
    return;
  }
  if (group_ == GroupKind::FreeOrthogonal) {
    if (n0 < BigRational(2))
      throw PoleError("free table valid for n >= 2; requested n=" + n0.to_string());
    return;
  }
  // Gram determinants vanish only at integers of magnitude < k.
  if (n0.is_integer() && n0.abs() <= BigRational(k_ - 1))
    throw PoleError("n=" + n0.to_string() + " lies in the degenerate set [" +
                    std::to_string(-k_ + 1) + "," + std::to_string(k_ - 1) +
                    "]; use the numeric pseudo-inverse mode");
}

BigRational WeingartenTable::evaluate(const Permutation& sigma, const BigRational& n0) const {
  check_pole_region(n0);
  return value(sigma).evaluate_at(n0);
}

BigRational WeingartenTable::evaluate(const PairPartition& pi, const PairPartition& rho,
                                      const BigRational& n0) const {
  check_pole_region(n0);
  return value(pi, rho).evaluate_at(n0);
}

const std::map<Partition, RationalFunction>& WeingartenTable::class_values() const {
  if (group_ == GroupKind::FreeOrthogonal)
    throw std::invalid_argument("free tables have no class values");
  return class_values_;
}

const std::vector<PairPartition>& WeingartenTable::pairing_basis() const {
  if (group_ != GroupKind::FreeOrthogonal)
    throw std::invalid_argument("only free tables carry a pairing basis");
  return basis_;
}

const Matrix<RationalFunction>& WeingartenTable::pairing_values() const {
  if (group_ != GroupKind::FreeOrthogonal)
    throw std::invalid_argument("only free tables carry a dense block");
  return dense_;
}

}  // namespace haarwell
