#include "haarwell/channel.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace haarwell {
namespace {

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// Largest eigenvalue of hermitian m restricted to the complement of `found`,
// by power iteration with projection deflation. Start vectors come from the
// caller's stream, so the whole report is deterministic.
double next_eigenvalue(const Eigen::MatrixXcd& m,
                       const std::vector<Eigen::VectorXcd>& found,
                       GaussianStream& g, Eigen::VectorXcd& out_vec) {
  const int dim = static_cast<int>(m.rows());
  Eigen::VectorXcd v(dim);
  for (int i = 0; i < dim; ++i) v(i) = std::complex<double>(g.next(), g.next());
  const auto project = [&found](Eigen::VectorXcd& x) {
    for (const auto& f : found) x -= f * f.dot(x);
  };
  project(v);
  v.normalize();

  double prev = 0.0;
  int stable = 0;
  for (int it = 0; it < 20000; ++it) {
    Eigen::VectorXcd w = m * v;
    project(w);
    const double lam = w.norm();
    if (lam == 0.0) {
      out_vec = v;
      return 0.0;
    }
    v = w / lam;
    if (std::abs(lam - prev) <= 1e-13 * std::max(1.0, lam)) {
      if (++stable >= 3) break;
    } else {
      stable = 0;
    }
    prev = lam;
  }
  project(v);
  v.normalize();
  out_vec = v;
  return std::real(std::complex<double>(v.dot(m * v)));
}

}  // namespace

std::string ChannelReport::to_json() const {
  std::string out = "{";
  out += "\"n\":" + std::to_string(n) + ",";
  out += "\"k\":" + std::to_string(k) + ",";
  out += "\"t\":\"" + t.to_string() + "\",";
  out += "\"p\":" + std::to_string(p) + ",";
  out += "\"samples\":" + std::to_string(samples) + ",";
  out += "\"seed\":" + std::to_string(rng.seed) + ",";
  out += "\"stream\":" + std::to_string(rng.stream) + ",";
  out += "\"eigenvalues\":[";
  for (size_t i = 0; i < eigenvalues.size(); ++i)
    out += fmt_double(eigenvalues[i]) + (i + 1 < eigenvalues.size() ? "," : "");
  out += "],\"expected\":[";
  for (size_t i = 0; i < expected.size(); ++i)
    out += fmt_double(expected[i]) + (i + 1 < expected.size() ? "," : "");
  out += "],\"tail_ratio\":" + fmt_double(tail_ratio);
  out += "}";
  return out;
}

ChannelReport channel_demo(int n, int k, const BigRational& t, long samples,
                           const RngSpec& spec) {
  if (n < 2 || k < 2) throw std::invalid_argument("channel demo needs n >= 2, k >= 2");
  if (n * k > 128) throw std::invalid_argument("channel demo capped at n k <= 128");
  if (t.sign() <= 0 || t > BigRational(1))
    throw std::invalid_argument("channel demo needs 0 < t <= 1");
  if (samples < 1) throw std::invalid_argument("channel demo needs samples >= 1");

  const int d = n * k;
  // input dimension: nearest integer to t n k
  const BigRational half(BigInt(1), BigInt(2));
  const BigRational scaled = t * BigRational(d) + half;
  long p = static_cast<long>(mpz_class(scaled.num() / scaled.den()).get_si());
  if (p < 1) p = 1;
  if (p > d) p = d;

  ChannelReport rep;
  rep.n = n;
  rep.k = k;
  rep.t = t;
  rep.p = p;
  rep.samples = samples;
  rep.rng = spec;

  const int want = k * k + 1;
  rep.eigenvalues.assign(static_cast<size_t>(want), 0.0);
  GaussianStream g(spec);
  const long p2 = p * p;

  for (long draw = 0; draw < samples; ++draw) {
    const ComplexMatrix u = sample_haar_unitary(d, g);

    // Phi(E_ij)[a,b] = sum_s U[(a,s),i] conj(U[(b,s),j]); row index (a,s) = a k + s.
    // T stacks the channel outputs: column (i,j), row (a,b).
    Eigen::MatrixXcd tmat(static_cast<long>(n) * n, p2);
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < p; ++j) {
        const long col = static_cast<long>(i) * p + j;
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) {
            std::complex<double> s = 0.0;
            for (int m = 0; m < k; ++m)
              s += u.at(a * k + m, i) * std::conj(u.at(b * k + m, j));
            tmat(static_cast<long>(a) * n + b, col) = s;
          }
      }

    // P[(a,b),(al,be)] = sum_ij Phi(E_ij)[a,b] conj(Phi(E_ij)[al,be]).
    const Eigen::MatrixXcd pmat = tmat * tmat.adjoint();

    // (Phi (x) conj(Phi))(E) acts on C^n (x) C^n with row (a,al), column
    // (b,be); that is the reshuffle of P, not P itself. 1/p normalizes the
    // entangled projector, making the result a trace-one positive operator.
    Eigen::MatrixXcd m(static_cast<long>(n) * n, static_cast<long>(n) * n);
    for (int a = 0; a < n; ++a)
      for (int al = 0; al < n; ++al)
        for (int b = 0; b < n; ++b)
          for (int be = 0; be < n; ++be)
            m(static_cast<long>(a) * n + al, static_cast<long>(b) * n + be) =
                pmat(static_cast<long>(a) * n + b, static_cast<long>(al) * n + be) /
                static_cast<double>(p);

    std::vector<Eigen::VectorXcd> vecs;
    for (int e = 0; e < want; ++e) {
      Eigen::VectorXcd v;
      rep.eigenvalues[static_cast<size_t>(e)] += next_eigenvalue(m, vecs, g, v);
      vecs.push_back(std::move(v));
    }
  }
  for (auto& lam : rep.eigenvalues) lam /= static_cast<double>(samples);

  const double td = t.to_double();
  rep.expected.push_back(td + (1.0 - td) / (k * k));
  for (int e = 1; e < k * k; ++e) rep.expected.push_back((1.0 - td) / (k * k));

  const double bulk = rep.eigenvalues[static_cast<size_t>(k * k - 1)];
  rep.tail_ratio = bulk > 0 ? rep.eigenvalues[static_cast<size_t>(k * k)] / bulk : 0.0;
  return rep;
}

}  // namespace haarwell
