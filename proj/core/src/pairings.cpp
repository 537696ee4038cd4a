#include "haarwell/pairings.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "haarwell/errors.hpp"

namespace haarwell {

PairPartition PairPartition::from_blocks(std::vector<std::pair<int, int>> blocks, int k) {
  if (k % 2 != 0) throw std::domain_error("PairPartition: odd point count");
  if (static_cast<int>(blocks.size()) * 2 != k)
    throw std::domain_error("PairPartition: wrong number of blocks");
  std::vector<bool> seen(k, false);
  for (auto& [a, b] : blocks) {
    if (a > b) std::swap(a, b);
    if (a < 1 || b > k || a == b)
      throw std::domain_error("PairPartition: block out of range");
    if (seen[a - 1] || seen[b - 1])
      throw std::domain_error("PairPartition: repeated point");
    seen[a - 1] = seen[b - 1] = true;
  }
  std::sort(blocks.begin(), blocks.end());
  PairPartition p;
  p.blocks_ = std::move(blocks);
  return p;
}

PairPartition PairPartition::parse(const std::string& s, int k) {
  std::string t;
  for (char c : s)
    if (!isspace(static_cast<unsigned char>(c))) t += c;
  std::vector<std::pair<int, int>> blocks;
  size_t pos = 0;
  while (pos < t.size()) {
    if (t[pos] != '{') throw ParseError("pairing: expected '{' in '" + s + "'");
    const size_t comma = t.find(',', pos);
    const size_t close = t.find('}', pos);
    if (comma == std::string::npos || close == std::string::npos || comma > close)
      throw ParseError("pairing: malformed block in '" + s + "'");
    int a = 0, b = 0;
    try {
      size_t ua = 0, ub = 0;
      const std::string sa = t.substr(pos + 1, comma - pos - 1);
      const std::string sb = t.substr(comma + 1, close - comma - 1);
      a = std::stoi(sa, &ua);
      b = std::stoi(sb, &ub);
      if (ua != sa.size() || ub != sb.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw ParseError("pairing: bad indices in '" + s + "'");
    }
    blocks.emplace_back(a, b);
    pos = close + 1;
  }
  try {
    return from_blocks(std::move(blocks), k);
  } catch (const std::domain_error& e) {
    throw ParseError(std::string("pairing: ") + e.what() + " in '" + s + "'");
  }
}

PairPartition PairPartition::identity(int k) {
  std::vector<std::pair<int, int>> blocks;
  for (int i = 1; i < k; i += 2) blocks.emplace_back(i, i + 1);
  return from_blocks(std::move(blocks), k);
}

int PairPartition::partner(int i) const {
  for (const auto& [a, b] : blocks_) {
    if (a == i) return b;
    if (b == i) return a;
  }
  throw std::domain_error("PairPartition: point out of range");
}

bool PairPartition::is_noncrossing() const {
  for (size_t x = 0; x < blocks_.size(); ++x)
    for (size_t y = x + 1; y < blocks_.size(); ++y) {
      const auto& [a, b] = blocks_[x];
      const auto& [c, d] = blocks_[y];
      // blocks_ is sorted, so a < c; crossing means a < c < b < d
      if (c < b && b < d) return false;
    }
  return true;
}

std::string PairPartition::to_string() const {
  std::string out;
  for (const auto& [a, b] : blocks_)
    out += "{" + std::to_string(a) + "," + std::to_string(b) + "}";
  return out;
}

std::vector<PairPartition> PairPartition::enumerate(int k) {
  if (k > 16)
    throw CapError("PairPartition::enumerate: k = " + std::to_string(k) +
                   " exceeds cap 16");
  std::vector<PairPartition> out;
  if (k % 2 != 0 || k < 0) return out;
  std::vector<int> free_points(k);
  std::iota(free_points.begin(), free_points.end(), 1);
  std::vector<std::pair<int, int>> blocks;
  std::function<void(std::vector<int>&)> rec = [&](std::vector<int>& pts) {
    if (pts.empty()) {
      out.push_back(from_blocks(blocks, k));
      return;
    }
    const int first = pts[0];
    for (size_t j = 1; j < pts.size(); ++j) {
      std::vector<int> rest;
      rest.reserve(pts.size() - 2);
      for (size_t m = 1; m < pts.size(); ++m)
        if (m != j) rest.push_back(pts[m]);
      blocks.emplace_back(first, pts[j]);
      rec(rest);
      blocks.pop_back();
    }
  };
  rec(free_points);
  return out;
}

std::vector<PairPartition> PairPartition::enumerate_noncrossing(int k) {
  if (k > 16)
    throw CapError("PairPartition::enumerate_noncrossing: k = " + std::to_string(k) +
                   " exceeds cap 16");
  std::vector<PairPartition> out;
  if (k % 2 != 0 || k < 0) return out;
  // Catalan recursion: the interval's first point pairs at an odd offset and
  // splits the rest into independent inner and outer intervals.
  using Blocks = std::vector<std::pair<int, int>>;
  std::function<std::vector<Blocks>(int, int)> rec =
      [&rec](int lo, int hi) -> std::vector<Blocks> {
    if (lo > hi) return {Blocks{}};
    std::vector<Blocks> result;
    for (int j = lo + 1; j <= hi; j += 2) {
      const std::vector<Blocks> inner = rec(lo + 1, j - 1);
      const std::vector<Blocks> outer = rec(j + 1, hi);
      for (const Blocks& a : inner)
        for (const Blocks& b : outer) {
          Blocks blocks{{lo, j}};
          blocks.insert(blocks.end(), a.begin(), a.end());
          blocks.insert(blocks.end(), b.begin(), b.end());
          result.push_back(std::move(blocks));
        }
    }
    return result;
  };
  for (Blocks& blocks : rec(1, k)) out.push_back(from_blocks(std::move(blocks), k));
  return out;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

int loops(const PairPartition& pi, const PairPartition& rho) {
  if (pi.points() != rho.points())
    throw std::domain_error("loops: point count mismatch");
  const int k = pi.points();
  UnionFind uf(k);
  for (const auto& [a, b] : pi.blocks()) uf.unite(a - 1, b - 1);
  for (const auto& [a, b] : rho.blocks()) uf.unite(a - 1, b - 1);
  int components = 0;
  for (int i = 0; i < k; ++i)
    if (uf.find(i) == i) ++components;
  return components;
}

Partition loop_type(const PairPartition& pi, const PairPartition& rho) {
  if (pi.points() != rho.points())
    throw std::domain_error("loop_type: point count mismatch");
  const int k = pi.points();
  UnionFind uf(k);
  for (const auto& [a, b] : pi.blocks()) uf.unite(a - 1, b - 1);
  for (const auto& [a, b] : rho.blocks()) uf.unite(a - 1, b - 1);
  std::vector<int> size(k, 0);
  for (int i = 0; i < k; ++i) ++size[uf.find(i)];
  std::vector<int> halves;
  for (int i = 0; i < k; ++i)
    if (size[i] > 0) halves.push_back(size[i] / 2);
  return Partition(std::move(halves));
}

bool pairing_delta(const PairPartition& pi, const MultiIndex& word) {
  if (static_cast<int>(word.size()) != pi.points())
    throw std::domain_error("pairing_delta: word length mismatch");
  for (const auto& [a, b] : pi.blocks())
    if (word[a - 1] != word[b - 1]) return false;
  return true;
}

PairPartition pairing_from_permutation(const Permutation& sigma) {
  const int kp = sigma.degree();
  std::vector<std::pair<int, int>> blocks;
  for (int i = 1; i <= kp; ++i) blocks.emplace_back(i, kp + sigma(i));
  return PairPartition::from_blocks(std::move(blocks), 2 * kp);
}

std::vector<std::pair<PairPartition, Permutation>> unitary_pairings(int kp) {
  if (kp > 7)
    throw CapError("unitary_pairings: kp = " + std::to_string(kp) + " exceeds cap 7");
  std::vector<std::pair<PairPartition, Permutation>> out;
  for (const auto& sigma : Permutation::enumerate(kp))
    out.emplace_back(pairing_from_permutation(sigma), sigma);
  return out;
}

}  // namespace haarwell
