#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "haarwell/errors.hpp"
#include "haarwell/weingarten.hpp"

namespace haarwell {
namespace {

constexpr const char* kMagic = "haarwell-table 1";

uint32_t fnv1a(const std::string& s) {
  uint32_t h = 2166136261u;
  for (unsigned char c : s) {
    h ^= c;
    h *= 16777619u;
  }
  return h;
}

std::string table_key(const WeingartenTable& t) {
  return group_name(t.group()) + ":" + std::to_string(t.degree()) + ":" +
         t.mode().to_string();
}

std::vector<BigRational> mat_vec(const Matrix<BigRational>& a,
                                 const std::vector<BigRational>& v) {
  std::vector<BigRational> out(static_cast<size_t>(a.rows()));
  for (int i = 0; i < a.rows(); ++i) {
    BigRational s;
    for (int j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero()) s += a(i, j) * v[static_cast<size_t>(j)];
    out[static_cast<size_t>(i)] = s;
  }
  return out;
}

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

// Reconstructs the reduced inverse-Gram system at one exact probe point and
// checks the loaded weights against it. Regular tables must satisfy A w = e;
// pseudo-inverse tables (numeric n0 below the degree) satisfy the weaker but
// corruption-proof G W G = G, i.e. A (A w) = A e.
void verify_class_system(const WeingartenTable& t, const Matrix<BigRational>& a,
                         const std::vector<BigRational>& w, int id_index) {
  std::vector<BigRational> e(w.size());
  e[static_cast<size_t>(id_index)] = BigRational(1);
  const auto aw = mat_vec(a, w);
  const bool regular =
      t.mode().is_symbolic() || t.mode().n0() >= BigRational(t.degree());
  if (regular) {
    if (aw != e) throw CacheError("table failed the inverse identity check");
    return;
  }
  if (mat_vec(a, aw) != mat_vec(a, e))
    throw CacheError("table failed the pseudo-inverse identity check");
}

void verify_unitary(const WeingartenTable& t) {
  const int k = t.degree();
  const BigRational n0 = t.mode().is_symbolic() ? BigRational(k + 1) : t.mode().n0();
  const auto classes = Partition::all(k);
  const int p = static_cast<int>(classes.size());
  if (static_cast<int>(t.class_values().size()) != p)
    throw CacheError("unitary table has a wrong class count");

  std::map<Partition, int> index;
  std::vector<Permutation> reps;
  int id_index = -1;
  for (int i = 0; i < p; ++i) {
    index.emplace(classes[static_cast<size_t>(i)], i);
    reps.push_back(Permutation::from_cycle_type(classes[static_cast<size_t>(i)], k));
    if (classes[static_cast<size_t>(i)].part(0) == 1) id_index = i;
  }
  std::vector<BigRational> w(static_cast<size_t>(p));
  for (int i = 0; i < p; ++i)
    w[static_cast<size_t>(i)] =
        t.class_values().at(classes[static_cast<size_t>(i)]).evaluate_at(n0);

  std::vector<BigRational> pw(static_cast<size_t>(k + 1));
  pw[0] = BigRational(1);
  for (int c = 1; c <= k; ++c) pw[static_cast<size_t>(c)] = pw[static_cast<size_t>(c - 1)] * n0;
  Matrix<BigRational> a(p, p);
  for (const auto& rho : Permutation::enumerate(k)) {
    const int mu = index.at(rho.cycle_type());
    const Permutation rinv = rho.inverse();
    for (int nu = 0; nu < p; ++nu)
      a(nu, mu) += pw[static_cast<size_t>(
          compose(rinv, reps[static_cast<size_t>(nu)]).cycle_count())];
  }
  verify_class_system(t, a, w, id_index);
}

void verify_orthogonal(const WeingartenTable& t) {
  const int k = t.degree();
  const int half = k / 2;
  const BigRational n0 = t.mode().is_symbolic() ? BigRational(k + 1) : t.mode().n0();
  const auto types = Partition::all(half);
  const int p = static_cast<int>(types.size());
  if (static_cast<int>(t.class_values().size()) != p)
    throw CacheError("orthogonal table has a wrong loop-type count");

  std::map<Partition, int> index;
  std::vector<PairPartition> reps;
  int id_index = -1;
  for (int i = 0; i < p; ++i) {
    index.emplace(types[static_cast<size_t>(i)], i);
    reps.push_back(loop_type_representative(types[static_cast<size_t>(i)], k));
    if (types[static_cast<size_t>(i)].part(0) == 1) id_index = i;
  }
  std::vector<BigRational> w(static_cast<size_t>(p));
  for (int i = 0; i < p; ++i)
    w[static_cast<size_t>(i)] =
        t.class_values().at(types[static_cast<size_t>(i)]).evaluate_at(n0);

  const PairPartition pi0 = PairPartition::identity(k);
  Matrix<BigRational> a(p, p);
  for (const auto& rho : PairPartition::enumerate(k)) {
    const int mu = index.at(loop_type(pi0, rho));
    for (int nu = 0; nu < p; ++nu)
      a(nu, mu) += BigRational::pow(n0, loops(rho, reps[static_cast<size_t>(nu)]));
  }
  verify_class_system(t, a, w, id_index);
}

void verify_free(const WeingartenTable& t) {
  const int k = t.degree();
  const BigRational n0 = t.mode().is_symbolic() ? BigRational(k + 1) : t.mode().n0();
  const auto& basis = t.pairing_basis();
  if (basis != PairPartition::enumerate_noncrossing(k))
    throw CacheError("free table basis is not in canonical order");
  const int b = static_cast<int>(basis.size());
  if (b == 0) throw CacheError("free table has an empty basis");

  std::mt19937 gen(fnv1a(table_key(t)));
  const int i = static_cast<int>(gen() % static_cast<uint32_t>(b));
  const int l = static_cast<int>(gen() % static_cast<uint32_t>(b));
  BigRational s;
  for (int j = 0; j < b; ++j)
    s += t.pairing_values()(i, j).evaluate_at(n0) *
         BigRational::pow(n0, loops(basis[static_cast<size_t>(j)],
                                    basis[static_cast<size_t>(l)]));
  if (!(s == BigRational(i == l ? 1 : 0)))
    throw CacheError("free table failed the inverse identity check");
}

void verify_table(const WeingartenTable& t) {
  switch (t.group()) {
    case GroupKind::Unitary:
      verify_unitary(t);
      return;
    case GroupKind::Orthogonal:
      verify_orthogonal(t);
      return;
    case GroupKind::FreeOrthogonal:
      verify_free(t);
      return;
  }
}

// Mirrors the widest factory cap per group. Checked before any size-dependent
// allocation so a tampered degree field cannot drive verification costs.
int max_cached_degree(GroupKind g) {
  switch (g) {
    case GroupKind::Unitary:
      return 8;
    case GroupKind::Orthogonal:
      return 10;
    case GroupKind::FreeOrthogonal:
      return 16;
  }
  return 0;
}

std::string read_field(std::istream& in, const std::string& name) {
  std::string line;
  if (!std::getline(in, line) || line.rfind(name + " ", 0) != 0)
    throw CacheError("table file: missing '" + name + "' field");
  return line.substr(name.size() + 1);
}

std::pair<std::string, RationalFunction> parse_entry(const std::string& line) {
  const size_t sep = line.find(" -> ");
  if (sep == std::string::npos) throw CacheError("table file: malformed entry line");
  try {
    return {line.substr(0, sep), RationalFunction::parse_cache(line.substr(sep + 4))};
  } catch (const ParseError& e) {
    throw CacheError(std::string("table file: ") + e.what());
  }
}

}  // namespace

std::string table_cache_filename(GroupKind g, int k, const TableMode& mode) {
  std::string m = mode.is_symbolic() ? "symbolic" : "n" + mode.n0().to_string();
  for (auto& c : m)
    if (c == '/') c = '_';
  return group_name(g) + "-k" + std::to_string(k) + "-" + m + ".wg";
}

void save_table(const WeingartenTable& table, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw CacheError("cannot write table file: " + path);
  out << kMagic << "\n";
  out << "group " << group_name(table.group()) << "\n";
  out << "k " << table.degree() << "\n";
  out << "mode " << table.mode().to_string() << "\n";
  if (table.group() == GroupKind::FreeOrthogonal) {
    const auto& basis = table.pairing_basis();
    const int b = static_cast<int>(basis.size());
    out << "entries " << static_cast<long>(b) * b << "\n";
    for (int i = 0; i < b; ++i)
      for (int j = 0; j < b; ++j)
        out << basis[static_cast<size_t>(i)].to_string() << "|"
            << basis[static_cast<size_t>(j)].to_string() << " -> "
            << table.pairing_values()(i, j).to_cache_string() << "\n";
  } else {
    out << "entries " << table.class_values().size() << "\n";
    for (const auto& [type, value] : table.class_values())
      out << type.to_string() << " -> " << value.to_cache_string() << "\n";
  }
  if (!out.good()) throw CacheError("write failure on table file: " + path);
}

WeingartenTable load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CacheError("cannot open table file: " + path);
  std::string line;
  if (!std::getline(in, line) || line != kMagic)
    throw CacheError("table file has a bad header: " + path);
  const GroupKind g = group_from_name(read_field(in, "group"));
  int k = 0;
  try {
    k = std::stoi(read_field(in, "k"));
  } catch (const std::exception&) {
    throw CacheError("table file: bad degree");
  }
  if (k < 1 || k > max_cached_degree(g))
    throw CacheError("table file exceeds engine caps: degree " + std::to_string(k));
  TableMode mode;
  try {
    mode = TableMode::parse(read_field(in, "mode"));
  } catch (const ParseError& e) {
    throw CacheError(std::string("table file: ") + e.what());
  }
  long entries = 0;
  try {
    entries = std::stol(read_field(in, "entries"));
  } catch (const std::exception&) {
    throw CacheError("table file: bad entry count");
  }

  WeingartenTable table;
  if (g == GroupKind::FreeOrthogonal) {
    auto basis = PairPartition::enumerate_noncrossing(k);
    const int b = static_cast<int>(basis.size());
    if (entries != static_cast<long>(b) * b)
      throw CacheError("table file: entry count does not match the basis");
    Matrix<RationalFunction> w(b, b);
    for (int i = 0; i < b; ++i)
      for (int j = 0; j < b; ++j) {
        if (!std::getline(in, line)) throw CacheError("table file: truncated");
        auto [key, value] = parse_entry(line);
        const std::string expect = basis[static_cast<size_t>(i)].to_string() + "|" +
                                   basis[static_cast<size_t>(j)].to_string();
        if (key != expect) throw CacheError("table file: entry key out of order");
        w(i, j) = std::move(value);
      }
    table = WeingartenTable::pairing_table(g, k, mode, std::move(basis), std::move(w));
  } else {
    std::map<Partition, RationalFunction> values;
    for (long e = 0; e < entries; ++e) {
      if (!std::getline(in, line)) throw CacheError("table file: truncated");
      auto [key, value] = parse_entry(line);
      try {
        values.emplace(Partition::parse(key), std::move(value));
      } catch (const ParseError& err) {
        throw CacheError(std::string("table file: ") + err.what());
      }
    }
    if (static_cast<long>(values.size()) != entries)
      throw CacheError("table file: duplicate entry keys");
    table = WeingartenTable::class_table(g, k, mode, std::move(values));
  }
  try {
    verify_table(table);
  } catch (const CapError& e) {
    throw CacheError(std::string("table file exceeds engine caps: ") + e.what());
  }
  return table;
}

}  // namespace haarwell
