#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "haarwell/integrate.hpp"
#include "haarwell/rational.hpp"

namespace haarwell {

struct RngSpec {
  uint64_t seed = 0;
  uint64_t stream = 0;
};

// Pinned Gaussian source: mt19937_64 plus the Marsaglia polar transform.
// std::normal_distribution is implementation-defined, which would break
// cross-platform reproducibility of every estimate downstream.
class GaussianStream {
 public:
  explicit GaussianStream(const RngSpec& spec);
  double next();
  std::complex<double> next_complex();  // E|z|^2 = 1
  double uniform();                     // [0, 1), 53-bit

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

struct ComplexMatrix {
  int n = 0;
  std::vector<std::complex<double>> a;  // row-major
  std::complex<double>& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  const std::complex<double>& at(int i, int j) const {
    return a[static_cast<size_t>(i) * n + j];
  }
};

struct RealMatrix {
  int n = 0;
  std::vector<double> a;
  double& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  const double& at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
};

// Ginibre QR with the diagonal phase (resp. sign) correction folded into Q,
// which makes the factorization unique and the output exactly Haar.
ComplexMatrix sample_haar_unitary(int n, GaussianStream& g);
RealMatrix sample_haar_orthogonal(int n, GaussianStream& g);

double unitarity_defect(const ComplexMatrix& u);    // max |(U* U - I)_{ij}|
double orthogonality_defect(const RealMatrix& o);

struct MomentEstimate {
  std::string monomial;
  GroupKind group = GroupKind::Unitary;
  int n = 0;
  long samples = 0;
  RngSpec rng;
  std::complex<double> estimate;
  double std_error = 0.0;
  std::optional<double> exact;    // filled when the exact engine covers the query
  std::optional<double> z_score;  // |estimate - exact| / std_error
  std::string to_json() const;
};

// Deterministic chunked estimator. The sample budget is split into 64 fixed
// chunks, each driving its own derived stream; chunk sums are combined by a
// fixed-order pairwise reduction, so the result is bit-identical for any
// thread count. FreeOrthogonal queries are rejected: there is no matrix
// model to sample, use the exact engine.
MomentEstimate estimate_moment(const MomentQuery& query, long samples,
                               const RngSpec& spec, int threads = 0);

struct TraceCltReport {
  int n = 0;
  long samples = 0;
  RngSpec rng;
  std::array<double, 4> moments{};     // sample moments of tr(O)
  std::array<double, 4> std_errors{};
  std::array<double, 4> expected{0.0, 1.0, 0.0, 3.0};  // standard normal limit
  bool within(double k_sigma) const;
  std::string to_json() const;
};
TraceCltReport trace_clt_demo(int n, long samples, const RngSpec& spec, int threads = 0);

}  // namespace haarwell
