#pragma once

#include <string>
#include <vector>

#include "haarwell/rational.hpp"
#include "haarwell/rational_function.hpp"

namespace haarwell {

// Integer partition: weakly decreasing positive parts. Doubles as a cycle
// type (parts = cycle lengths, fixed points included) and as a Young diagram
// (parts = row lengths).
class Partition {
 public:
  Partition() = default;  // partition of 0
  explicit Partition(std::vector<int> parts);

  int sum() const;
  int count() const { return static_cast<int>(parts_.size()); }
  int part(int i) const { return parts_[i]; }  // 0-indexed, largest first
  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }

  // "2,1"; empty partition prints "-".
  std::string to_string() const;
  static Partition parse(const std::string& s);

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts_ == b.parts_;
  }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
  friend bool operator<(const Partition& a, const Partition& b) {
    return a.parts_ < b.parts_;
  }

  // All partitions of k in descending lexicographic order, (k) first.
  static std::vector<Partition> all(int k);

 private:
  std::vector<int> parts_;
};

using CycleType = Partition;
using YoungDiagram = Partition;

// |{sigma in S_k : cycle_type(sigma) = mu}| = k! / prod_j j^{m_j} m_j!.
BigInt conjugacy_class_size(const Partition& mu);

BigInt factorial(int k);

// Hook lengths of the diagram, row by row.
std::vector<std::vector<int>> hook_lengths(const YoungDiagram& lambda);

// Dimension of the S_k irreducible: k! / prod hooks (hook length formula).
BigInt dimension_sn(const YoungDiagram& lambda);

// Dimension of the U(n) irreducible with highest weight lambda, as a function
// of n: prod_boxes (n + col - row) / prod hooks. Vanishes at integer n
// smaller than the number of rows.
RationalFunction dimension_un(const YoungDiagram& lambda);

}  // namespace haarwell
