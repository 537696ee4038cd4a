#pragma once

#include <string>
#include <vector>

#include "haarwell/montecarlo.hpp"
#include "haarwell/rational.hpp"

namespace haarwell {

// Random quantum channel Phi(X) = tr_k( U (X (+) 0) U* ) built from one Haar
// unitary on C^n (x) C^k, with input dimension p = round(t n k). The spectrum
// of (Phi (x) conj(Phi)) applied to the maximally entangled projector
// concentrates on k*k values t + (1-t)/k^2 (once) and (1-t)/k^2 (k^2 - 1
// times), with the rest of the spectrum an order of magnitude below.
struct ChannelReport {
  int n = 0;
  int k = 0;
  BigRational t;
  long p = 0;        // input dimension actually used
  long samples = 1;  // independent channel draws, eigenvalues averaged
  RngSpec rng;
  std::vector<double> eigenvalues;  // top k^2 + 1, descending
  std::vector<double> expected;     // the k^2 limit values, descending
  double tail_ratio = 0.0;          // eigenvalue k^2+1 over eigenvalue k^2
  std::string to_json() const;
};

ChannelReport channel_demo(int n, int k, const BigRational& t, long samples,
                           const RngSpec& spec);

}  // namespace haarwell
