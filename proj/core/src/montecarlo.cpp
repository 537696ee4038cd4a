#include "haarwell/montecarlo.hpp"

#include <Eigen/Dense>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <stdexcept>
#include <thread>

#include "haarwell/errors.hpp"

namespace haarwell {
namespace {

constexpr int kChunks = 64;

RngSpec chunk_spec(const RngSpec& spec, int chunk) {
  // Mixed so distinct parent streams cannot collide on nearby children.
  return RngSpec{spec.seed,
                 spec.stream * 0x9E3779B97F4A7C15ull + static_cast<uint64_t>(chunk) + 1};
}

// Fixed-order pairwise reduction; identical result for any worker count.
template <typename T>
T pairwise(std::vector<T> xs) {
  if (xs.empty()) return T{};
  while (xs.size() > 1) {
    std::vector<T> next;
    next.reserve((xs.size() + 1) / 2);
    for (size_t i = 0; i + 1 < xs.size(); i += 2) next.push_back(xs[i] + xs[i + 1]);
    if (xs.size() % 2 == 1) next.push_back(xs.back());
    xs = std::move(next);
  }
  return xs[0];
}

void run_chunks(int threads, int total, const std::function<void(int)>& work) {
  if (threads <= 0) {
    const unsigned hw = std::thread::hardware_concurrency();
    threads = static_cast<int>(hw == 0 ? 1 : hw);
  }
  threads = std::min({threads, total, 16});
  if (threads <= 1) {
    for (int c = 0; c < total; ++c) work(c);
    return;
  }
  std::atomic<int> cursor{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(threads));
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (int c = cursor.fetch_add(1); c < total; c = cursor.fetch_add(1)) work(c);
    });
  for (auto& th : pool) th.join();
}

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

GaussianStream::GaussianStream(const RngSpec& spec) {
  std::seed_seq seq{static_cast<uint32_t>(spec.seed), static_cast<uint32_t>(spec.seed >> 32),
                    static_cast<uint32_t>(spec.stream),
                    static_cast<uint32_t>(spec.stream >> 32)};
  gen_.seed(seq);
}

double GaussianStream::uniform() {
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double GaussianStream::next() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u, v, s;
  do {
    u = 2.0 * uniform() - 1.0;
    v = 2.0 * uniform() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double f = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * f;
  have_spare_ = true;
  return u * f;
}

std::complex<double> GaussianStream::next_complex() {
  const double re = next();
  const double im = next();
  return {re * M_SQRT1_2, im * M_SQRT1_2};
}

ComplexMatrix sample_haar_unitary(int n, GaussianStream& g) {
  Eigen::MatrixXcd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = g.next_complex();
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd& r = qr.matrixQR();
  for (int j = 0; j < n; ++j) {
    const std::complex<double> d = r(j, j);
    const double len = std::abs(d);
    const std::complex<double> phase = len > 0 ? std::conj(d / len) : 1.0;
    q.col(j) *= phase;
  }
  ComplexMatrix u;
  u.n = n;
  u.a.resize(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) u.at(i, j) = q(i, j);
  return u;
}

RealMatrix sample_haar_orthogonal(int n, GaussianStream& g) {
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = g.next();
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd& r = qr.matrixQR();
  for (int j = 0; j < n; ++j)
    if (r(j, j) < 0) q.col(j) = -q.col(j);
  RealMatrix o;
  o.n = n;
  o.a.resize(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) o.at(i, j) = q(i, j);
  return o;
}

double unitarity_defect(const ComplexMatrix& u) {
  const int n = u.n;
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::complex<double> s = 0.0;
      for (int m = 0; m < n; ++m) s += std::conj(u.at(m, i)) * u.at(m, j);
      if (i == j) s -= 1.0;
      worst = std::max(worst, std::abs(s));
    }
  return worst;
}

double orthogonality_defect(const RealMatrix& o) {
  const int n = o.n;
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int m = 0; m < n; ++m) s += o.at(m, i) * o.at(m, j);
      if (i == j) s -= 1.0;
      worst = std::max(worst, std::abs(s));
    }
  return worst;
}

std::string MomentEstimate::to_json() const {
  std::string out = "{";
  out += "\"monomial\":\"" + monomial + "\",";
  out += "\"group\":\"" + group_name(group) + "\",";
  out += "\"n\":" + std::to_string(n) + ",";
  out += "\"samples\":" + std::to_string(samples) + ",";
  out += "\"seed\":" + std::to_string(rng.seed) + ",";
  out += "\"stream\":" + std::to_string(rng.stream) + ",";
  out += "\"estimate\":[" + fmt_double(estimate.real()) + "," +
         fmt_double(estimate.imag()) + "],";
  out += "\"std_error\":" + fmt_double(std_error);
  if (exact) out += ",\"exact\":" + fmt_double(*exact);
  if (z_score) out += ",\"z\":" + fmt_double(*z_score);
  out += "}";
  return out;
}

MomentEstimate estimate_moment(const MomentQuery& query, long samples, const RngSpec& spec,
                               int threads) {
  if (query.group == GroupKind::FreeOrthogonal)
    throw std::invalid_argument(
        "no matrix model to sample for the free group; use the exact engine");
  if (query.mode.is_symbolic() || !query.mode.n0().is_integer())
    throw std::invalid_argument("sampling needs an integer matrix size");
  if (samples < 2) throw std::invalid_argument("need at least 2 samples");
  const BigRational& n0 = query.mode.n0();
  if (n0 > BigRational(4096)) throw std::invalid_argument("matrix size too large to sample");
  const int n = static_cast<int>(n0.to_double());
  if (BigRational(query.min_dimension()) > n0)
    throw std::invalid_argument("monomial references entries outside the matrix");

  MomentEstimate out;
  out.monomial = monomial_to_string(query.factors);
  out.group = query.group;
  out.n = n;
  out.samples = samples;
  out.rng = spec;

  std::vector<long> counts(kChunks, samples / kChunks);
  for (long r = 0; r < samples % kChunks; ++r) ++counts[static_cast<size_t>(r)];

  std::vector<std::complex<double>> sums(kChunks);
  std::vector<double> sqsums(kChunks);
  run_chunks(threads, kChunks, [&](int c) {
    GaussianStream g(chunk_spec(spec, c));
    std::complex<double> s = 0.0;
    double s2 = 0.0;
    for (long it = 0; it < counts[static_cast<size_t>(c)]; ++it) {
      std::complex<double> v = 1.0;
      if (query.group == GroupKind::Unitary) {
        const ComplexMatrix u = sample_haar_unitary(n, g);
        for (const auto& f : query.factors) {
          const std::complex<double> e = u.at(f.row - 1, f.col - 1);
          v *= f.conjugated ? std::conj(e) : e;
        }
      } else {
        const RealMatrix o = sample_haar_orthogonal(n, g);
        for (const auto& f : query.factors) v *= o.at(f.row - 1, f.col - 1);
      }
      s += v;
      s2 += std::norm(v);
    }
    sums[static_cast<size_t>(c)] = s;
    sqsums[static_cast<size_t>(c)] = s2;
  });

  const std::complex<double> total = pairwise(sums);
  const double total2 = pairwise(sqsums);
  const double nn = static_cast<double>(samples);
  out.estimate = total / nn;
  const double var = std::max(0.0, (total2 - nn * std::norm(out.estimate)) / (nn - 1.0));
  out.std_error = std::sqrt(var / nn);

  try {
    const RationalFunction exact = integrate(query);
    out.exact = exact.is_zero() ? 0.0 : exact.constant_value().to_double();
    const double err = std::abs(out.estimate - std::complex<double>(*out.exact, 0.0));
    out.z_score = out.std_error > 0
                      ? err / out.std_error
                      : (err == 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
  } catch (const CapError&) {
    // beyond the exact caps; report the estimate alone
  }
  return out;
}

bool TraceCltReport::within(double k_sigma) const {
  for (size_t i = 0; i < moments.size(); ++i) {
    const double tol = k_sigma * std_errors[i];
    if (std::abs(moments[i] - expected[i]) > tol) return false;
  }
  return true;
}

std::string TraceCltReport::to_json() const {
  std::string out = "{";
  out += "\"n\":" + std::to_string(n) + ",";
  out += "\"samples\":" + std::to_string(samples) + ",";
  out += "\"seed\":" + std::to_string(rng.seed) + ",";
  out += "\"stream\":" + std::to_string(rng.stream) + ",";
  for (int m = 0; m < 4; ++m)
    out += "\"m" + std::to_string(m + 1) +
           "\":" + fmt_double(moments[static_cast<size_t>(m)]) + ",";
  for (int m = 0; m < 4; ++m)
    out += "\"se" + std::to_string(m + 1) +
           "\":" + fmt_double(std_errors[static_cast<size_t>(m)]) +
           (m + 1 < 4 ? "," : "");
  out += "}";
  return out;
}

TraceCltReport trace_clt_demo(int n, long samples, const RngSpec& spec, int threads) {
  if (n < 2) throw std::invalid_argument("trace demo needs n >= 2");
  if (samples < 2) throw std::invalid_argument("need at least 2 samples");

  TraceCltReport rep;
  rep.n = n;
  rep.samples = samples;
  rep.rng = spec;

  std::vector<long> counts(kChunks, samples / kChunks);
  for (long r = 0; r < samples % kChunks; ++r) ++counts[static_cast<size_t>(r)];

  // power sums of tr(O) up to 8 for the standard errors of moments 1..4
  std::vector<std::array<double, 8>> psums(kChunks);
  run_chunks(threads, kChunks, [&](int c) {
    GaussianStream g(chunk_spec(spec, c));
    std::array<double, 8> p{};
    for (long it = 0; it < counts[static_cast<size_t>(c)]; ++it) {
      const RealMatrix o = sample_haar_orthogonal(n, g);
      double tr = 0.0;
      for (int i = 0; i < n; ++i) tr += o.at(i, i);
      double pw = 1.0;
      for (int m = 0; m < 8; ++m) {
        pw *= tr;
        p[static_cast<size_t>(m)] += pw;
      }
    }
    psums[static_cast<size_t>(c)] = p;
  });

  std::array<double, 8> p{};
  for (int m = 0; m < 8; ++m) {
    std::vector<double> xs(kChunks);
    for (int c = 0; c < kChunks; ++c) xs[static_cast<size_t>(c)] = psums[static_cast<size_t>(c)][static_cast<size_t>(m)];
    p[static_cast<size_t>(m)] = pairwise(xs);
  }
  const double nn = static_cast<double>(samples);
  for (int m = 1; m <= 4; ++m) {
    const double mean = p[static_cast<size_t>(m - 1)] / nn;
    const double mean2 = p[static_cast<size_t>(2 * m - 1)] / nn;
    rep.moments[static_cast<size_t>(m - 1)] = mean;
    const double var = std::max(0.0, (mean2 - mean * mean) * nn / (nn - 1.0));
    rep.std_errors[static_cast<size_t>(m - 1)] = std::sqrt(var / nn);
  }
  return rep;
}

}  // namespace haarwell
