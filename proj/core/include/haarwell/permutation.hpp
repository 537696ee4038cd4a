#pragma once

#include <string>
#include <vector>

#include "haarwell/partitions.hpp"

namespace haarwell {

// Permutation of {1..k}, stored in one-line notation (1-indexed images).
class Permutation {
 public:
  Permutation() = default;  // degree 0, the empty permutation
  explicit Permutation(int k);

  // images[i] is the image of i+1; must be a bijection on {1..k}.
  static Permutation from_one_line(std::vector<int> images);
  // Cycle notation: "(1 3 2)(4 5)", commas allowed; "e" and "()" mean identity.
  // Indices must lie in 1..k and appear at most once.
  static Permutation from_cycles(const std::string& s, int k);
  static Permutation transposition(int k, int a, int b);
  // Canonical class representative: consecutive cycles, largest first.
  static Permutation from_cycle_type(const Partition& type, int k);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x - 1]; }

  Permutation inverse() const;
  bool is_identity() const;
  int cycle_count() const;
  // Minimal number of transpositions: degree() - cycle_count().
  int length() const { return degree() - cycle_count(); }
  Partition cycle_type() const;

  std::string to_cycle_string() const;

  // Lexicographic rank of the one-line word within S_k (Lehmer code).
  long rank() const;

  // All k! elements in lexicographic one-line order; cap k <= 8.
  static std::vector<Permutation> enumerate(int k);

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.images_ == b.images_;
  }
  friend bool operator!=(const Permutation& a, const Permutation& b) {
    return !(a == b);
  }
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.images_ < b.images_;
  }

  // (a . b)(x) = a(b(x)).
  friend Permutation compose(const Permutation& a, const Permutation& b);

 private:
  std::vector<int> images_;
};

}  // namespace haarwell
