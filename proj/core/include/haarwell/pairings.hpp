#pragma once

#include <string>
#include <utility>
#include <vector>

#include "haarwell/partitions.hpp"
#include "haarwell/permutation.hpp"

namespace haarwell {

// Perfect pairing of {1..k}, k even. Canonical form: every block (a, b) has
// a < b and blocks are sorted by first element, so equality is structural.
class PairPartition {
 public:
  PairPartition() = default;

  static PairPartition from_blocks(std::vector<std::pair<int, int>> blocks, int k);
  // "{1,2}{3,4}"; whitespace tolerated, blocks must tile {1..k} exactly.
  static PairPartition parse(const std::string& s, int k);
  // {{1,2},{3,4},...}: the base point of the orthogonal calculus.
  static PairPartition identity(int k);

  int points() const { return 2 * static_cast<int>(blocks_.size()); }
  const std::vector<std::pair<int, int>>& blocks() const { return blocks_; }
  int partner(int i) const;

  bool is_noncrossing() const;
  std::string to_string() const;

  friend bool operator==(const PairPartition& a, const PairPartition& b) {
    return a.blocks_ == b.blocks_;
  }
  friend bool operator!=(const PairPartition& a, const PairPartition& b) {
    return !(a == b);
  }
  friend bool operator<(const PairPartition& a, const PairPartition& b) {
    return a.blocks_ < b.blocks_;
  }

  // All (k-1)!! pairings, deterministic order (smallest free point pairs with
  // each larger free point in turn). Odd k yields an empty list; cap k <= 16.
  static std::vector<PairPartition> enumerate(int k);
  // The Catalan(k/2) noncrossing pairings, generated directly.
  static std::vector<PairPartition> enumerate_noncrossing(int k);

 private:
  std::vector<std::pair<int, int>> blocks_;
};

// Number of connected components of the union multigraph of pi and rho.
// Components alternate pi- and rho-edges, so each has even size.
int loops(const PairPartition& pi, const PairPartition& rho);

// Partition of k/2 listing the half-lengths of the union components.
Partition loop_type(const PairPartition& pi, const PairPartition& rho);

// Index word {1..k} -> {1..n}.
using MultiIndex = std::vector<int>;

// 1 iff the word is constant on every block of pi.
bool pairing_delta(const PairPartition& pi, const MultiIndex& word);

// The unitary calculus embeds S_kp into pairings of {1..2kp} via
// sigma -> {{i, kp + sigma(i)}}; loops(of images) recovers cycle counts.
PairPartition pairing_from_permutation(const Permutation& sigma);
// All of S_kp paired with their images; cap kp <= 7.
std::vector<std::pair<PairPartition, Permutation>> unitary_pairings(int kp);

}  // namespace haarwell
