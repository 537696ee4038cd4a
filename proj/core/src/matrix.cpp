#include "haarwell/matrix.hpp"

#include <stdexcept>

namespace haarwell {

Matrix<BigRational> evaluate_matrix(const Matrix<RationalFunction>& m, const BigRational& n0) {
  Matrix<BigRational> out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).evaluate_at(n0);
  return out;
}

Matrix<BigRational> pseudo_inverse(const Matrix<BigRational>& a) {
  if (!a.is_symmetric())
    throw std::invalid_argument("pseudo_inverse: input must be symmetric");
  const int n = a.rows();

  RrefResult<BigRational> red = reduced_row_echelon(a);
  const int r = red.rank;
  if (r == 0) return Matrix<BigRational>(n, n);  // pseudo-inverse of 0 is 0

  // Rank factorization a = c * f with c the pivot columns of a and f the
  // nonzero rows of the reduced row echelon form.
  Matrix<BigRational> c(n, r), f(r, n);
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < n; ++i) c(i, j) = a(i, red.pivot_cols[j]);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < n; ++j) f(i, j) = red.rref(i, j);

  const Matrix<BigRational> ft = f.transpose();
  const Matrix<BigRational> ct = c.transpose();
  const Matrix<BigRational> m1 = bareiss_inverse(f * ft);
  const Matrix<BigRational> m2 = bareiss_inverse(ct * c);
  Matrix<BigRational> w = ft * m1 * m2 * ct;

  // Exact Penrose identity check; a failure here is a library bug, not input error.
  const Matrix<BigRational> aw = a * w;
  const Matrix<BigRational> wa = w * a;
  if (aw * a != a || wa * w != w || aw.transpose() != aw || wa.transpose() != wa)
    throw std::logic_error("pseudo_inverse: Penrose identity verification failed");
  return w;
}

template class Matrix<BigRational>;
template class Matrix<RationalFunction>;
template Matrix<BigRational> bareiss_inverse(const Matrix<BigRational>&);
template Matrix<RationalFunction> bareiss_inverse(const Matrix<RationalFunction>&);
template BigRational bareiss_determinant(const Matrix<BigRational>&);
template RationalFunction bareiss_determinant(const Matrix<RationalFunction>&);
template Matrix<BigRational> gauss_jordan_inverse(const Matrix<BigRational>&);
template Matrix<RationalFunction> gauss_jordan_inverse(const Matrix<RationalFunction>&);
template RrefResult<BigRational> reduced_row_echelon(Matrix<BigRational>);
template RrefResult<RationalFunction> reduced_row_echelon(Matrix<RationalFunction>);

}  // namespace haarwell
