#pragma once

#include <utility>
#include <vector>

#include "haarwell/errors.hpp"
#include "haarwell/polynomial.hpp"
#include "haarwell/rational.hpp"
#include "haarwell/rational_function.hpp"

namespace haarwell {

// Dense matrix over an exact field (BigRational or RationalFunction).
template <typename T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols, const T& init = T())
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, init) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const T& operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

  Matrix transpose() const {
    Matrix m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
      for (int j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::domain_error("Matrix: shape mismatch in product");
    Matrix out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == T()) continue;
        for (int j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::domain_error("Matrix: shape mismatch in sum");
    for (size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::domain_error("Matrix: shape mismatch in difference");
    for (size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  int rows_, cols_;
  std::vector<T> data_;
};

// Binds each exact field to the ring its fraction-free elimination runs in.
template <typename F>
struct FieldOps;

template <>
struct FieldOps<BigRational> {
  using Ring = BigInt;
  static Ring num(const BigRational& x) { return x.num(); }
  static Ring den(const BigRational& x) { return x.den(); }
  static BigRational make(const Ring& n, const Ring& d) { return BigRational(n, d); }
  static BigRational to_field(const Ring& r) { return BigRational(r); }
  static Ring lcm(const Ring& a, const Ring& b) {
    Ring r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
  }
  static Ring div_exact(const Ring& a, const Ring& b) {
    Ring q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) throw std::domain_error("fraction-free elimination: inexact division");
    return q;
  }
  static bool is_zero(const Ring& x) { return x == 0; }
  // Pivot preference: fewer bits first.
  static long weight(const Ring& x) {
    return static_cast<long>(mpz_sizeinbase(x.get_mpz_t(), 2));
  }
};

template <>
struct FieldOps<RationalFunction> {
  using Ring = IntPolynomial;
  static Ring num(const RationalFunction& x) { return x.numer(); }
  static Ring den(const RationalFunction& x) { return x.denom(); }
  static RationalFunction make(const Ring& n, const Ring& d) {
    return RationalFunction(n, d);
  }
  static RationalFunction to_field(const Ring& r) { return RationalFunction(r); }
  static Ring lcm(const Ring& a, const Ring& b) {
    if (a.is_zero() || b.is_zero()) return Ring();
    return Ring::div_exact(a * b, Ring::gcd(a, b));
  }
  static Ring div_exact(const Ring& a, const Ring& b) { return Ring::div_exact(a, b); }
  static bool is_zero(const Ring& x) { return x.is_zero(); }
  // Pivot preference: lower degree first.
  static long weight(const Ring& x) { return x.degree(); }
};

template <typename F>
struct RrefResult {
  Matrix<F> rref;
  std::vector<int> pivot_cols;
  int rank = 0;
};

// Plain Gauss-Jordan reduction over the field. Shared by the rank reporting
// path, the pseudo-inverse rank factorization, and tests.
template <typename F>
RrefResult<F> reduced_row_echelon(Matrix<F> a) {
  RrefResult<F> out;
  const int rows = a.rows(), cols = a.cols();
  int lead = 0;
  for (int col = 0; col < cols && lead < rows; ++col) {
    int piv = -1;
    for (int i = lead; i < rows; ++i)
      if (!(a(i, col) == F())) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != lead)
      for (int j = 0; j < cols; ++j) std::swap(a(piv, j), a(lead, j));
    const F inv_pivot = F(1) / a(lead, col);
    for (int j = 0; j < cols; ++j) a(lead, j) *= inv_pivot;
    for (int i = 0; i < rows; ++i) {
      if (i == lead || a(i, col) == F()) continue;
      const F f = a(i, col);
      for (int j = 0; j < cols; ++j) a(i, j) -= f * a(lead, j);
    }
    out.pivot_cols.push_back(col);
    ++lead;
  }
  out.rank = static_cast<int>(out.pivot_cols.size());
  out.rref = std::move(a);
  return out;
}

namespace detail {

template <typename F>
[[noreturn]] void throw_singular(const Matrix<F>& a) {
  const int rank = reduced_row_echelon(a).rank;
  throw SingularMatrixError("singular matrix (rank " + std::to_string(rank) +
                                " of " + std::to_string(a.rows()) + ")",
                            rank);
}

// Clears denominators: returns the ring matrix Z and scalar L with A = Z / L.
template <typename F>
std::pair<std::vector<std::vector<typename FieldOps<F>::Ring>>, typename FieldOps<F>::Ring>
lift_to_ring(const Matrix<F>& a) {
  using Ops = FieldOps<F>;
  using Ring = typename Ops::Ring;
  Ring l(1);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) l = Ops::lcm(l, Ops::den(a(i, j)));
  std::vector<std::vector<Ring>> z(a.rows(), std::vector<Ring>(a.cols()));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const Ring scale = Ops::div_exact(l, Ops::den(a(i, j)));
      z[i][j] = Ops::num(a(i, j)) * scale;
    }
  return {std::move(z), std::move(l)};
}

}  // namespace detail

// Exact inverse by one-step fraction-free Gauss-Jordan elimination (Bareiss
// divisions stay in the ring after denominators are cleared). Throws
// SingularMatrixError carrying the rank when not invertible.
template <typename F>
Matrix<F> bareiss_inverse(const Matrix<F>& a) {
  using Ops = FieldOps<F>;
  using Ring = typename Ops::Ring;
  if (a.rows() != a.cols()) throw std::domain_error("bareiss_inverse: not square");
  const int n = a.rows();
  if (n == 0) return Matrix<F>();

  auto [w, lift] = detail::lift_to_ring(a);
  for (int i = 0; i < n; ++i) {
    w[i].resize(2 * n, Ring(0));
    w[i][n + i] = Ring(1);
  }

  Ring prev(1);
  for (int p = 0; p < n; ++p) {
    int piv = -1;
    for (int i = p; i < n; ++i) {
      if (Ops::is_zero(w[i][p])) continue;
      if (piv < 0 || Ops::weight(w[i][p]) < Ops::weight(w[piv][p])) piv = i;
    }
    if (piv < 0) detail::throw_singular(a);
    if (piv != p) std::swap(w[piv], w[p]);
    // Jordan one-step: every non-pivot row is updated in full, in particular
    // the diagonal entries of earlier pivot rows, which keeps all processed
    // diagonals equal to the current leading minor.
    for (int i = 0; i < n; ++i) {
      if (i == p) continue;
      for (int j = 0; j < 2 * n; ++j) {
        if (j == p) continue;
        w[i][j] = Ops::div_exact(w[p][p] * w[i][j] - w[i][p] * w[p][j], prev);
      }
      w[i][p] = Ring(0);
    }
    prev = w[p][p];
  }

  // All diagonal entries now equal the determinant of the lifted matrix (up to
  // the row-swap sign, shared by every row), and the right block carries the
  // adjugate scaled the same way.
  Matrix<F> out(n, n);
  const F lift_f = Ops::to_field(lift);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = Ops::make(w[i][n + j], w[i][i]) * lift_f;
  return out;
}

// Exact determinant by forward-only Bareiss elimination.
template <typename F>
F bareiss_determinant(const Matrix<F>& a) {
  using Ops = FieldOps<F>;
  using Ring = typename Ops::Ring;
  if (a.rows() != a.cols()) throw std::domain_error("bareiss_determinant: not square");
  const int n = a.rows();
  if (n == 0) return F(1);

  auto [w, lift] = detail::lift_to_ring(a);
  Ring prev(1);
  int sign = 1;
  for (int p = 0; p < n; ++p) {
    int piv = -1;
    for (int i = p; i < n; ++i) {
      if (Ops::is_zero(w[i][p])) continue;
      if (piv < 0 || Ops::weight(w[i][p]) < Ops::weight(w[piv][p])) piv = i;
    }
    if (piv < 0) return F();
    if (piv != p) {
      std::swap(w[piv], w[p]);
      sign = -sign;
    }
    for (int i = p + 1; i < n; ++i) {
      for (int j = p + 1; j < n; ++j)
        w[i][j] = Ops::div_exact(w[p][p] * w[i][j] - w[i][p] * w[p][j], prev);
      w[i][p] = Ring(0);
    }
    prev = w[p][p];
  }

  F det = Ops::to_field(prev);
  if (sign < 0) det = F() - det;
  F lift_pow = F(1);
  const F lift_f = Ops::to_field(lift);
  for (int i = 0; i < n; ++i) lift_pow *= lift_f;
  return det / lift_pow;
}

// Naive field Gauss-Jordan inverse; kept as the independent oracle for the
// fraction-free path in tests.
template <typename F>
Matrix<F> gauss_jordan_inverse(const Matrix<F>& a) {
  if (a.rows() != a.cols()) throw std::domain_error("gauss_jordan_inverse: not square");
  const int n = a.rows();
  Matrix<F> w(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) w(i, j) = a(i, j);
    w(i, n + i) = F(1);
  }
  for (int p = 0; p < n; ++p) {
    int piv = -1;
    for (int i = p; i < n; ++i)
      if (!(w(i, p) == F())) {
        piv = i;
        break;
      }
    if (piv < 0) detail::throw_singular(a);
    if (piv != p)
      for (int j = 0; j < 2 * n; ++j) std::swap(w(piv, j), w(p, j));
    const F inv_pivot = F(1) / w(p, p);
    for (int j = 0; j < 2 * n; ++j) w(p, j) *= inv_pivot;
    for (int i = 0; i < n; ++i) {
      if (i == p || w(i, p) == F()) continue;
      const F f = w(i, p);
      for (int j = 0; j < 2 * n; ++j) w(i, j) -= f * w(p, j);
    }
  }
  Matrix<F> out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = w(i, n + j);
  return out;
}

// Evaluate a symbolic matrix entrywise; PoleError propagates from entries.
Matrix<BigRational> evaluate_matrix(const Matrix<RationalFunction>& m, const BigRational& n0);

// Moore-Penrose pseudo-inverse of a symmetric rational matrix by exact rank
// factorization; the four Penrose identities are re-verified before returning.
// Throws std::invalid_argument on non-symmetric input.
Matrix<BigRational> pseudo_inverse(const Matrix<BigRational>& a);

}  // namespace haarwell
