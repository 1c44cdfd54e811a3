#pragma once

// Exact rank / determinant / inverse for dense Eigen matrices over an exact field
// (CycloNumber, Rational).  Pivots are chosen by exact comparison with zero, never
// by magnitude, so these must not be used with floating-point scalars.

#include <utility>

#include <Eigen/Core>

#include "smatrix/errors.hpp"

namespace smatrix {

namespace detail {

template <typename Scalar>
bool exact_zero(const Scalar& x) {
  return x == Scalar(0);
}

/// Fraction-free (Bareiss) forward elimination in place.  Returns the rank and
/// flips `sign` for every row swap.
template <typename Scalar>
Eigen::Index bareiss_eliminate(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& m, int& sign) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  Scalar prev(1);
  Eigen::Index row = 0;
  sign = 1;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    Eigen::Index pivot = row;
    while (pivot < rows && exact_zero(m(pivot, col))) ++pivot;
    if (pivot == rows) continue;
    if (pivot != row) {
      m.row(pivot).swap(m.row(row));
      sign = -sign;
    }
    for (Eigen::Index i = row + 1; i < rows; ++i) {
      for (Eigen::Index j = col + 1; j < cols; ++j) {
        m(i, j) = (m(row, col) * m(i, j) - m(i, col) * m(row, j)) / prev;
      }
      m(i, col) = Scalar(0);
    }
    prev = m(row, col);
    ++row;
  }
  return row;
}

}  // namespace detail

template <typename Derived>
Eigen::Index exact_rank(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m = a;
  int sign = 1;
  return detail::bareiss_eliminate(m, sign);
}

template <typename Derived>
typename Derived::Scalar exact_determinant(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  if (a.rows() != a.cols()) throw Error(Errc::NotSquare, "determinant of a non-square matrix");
  if (a.rows() == 0) return Scalar(1);
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m = a;
  int sign = 1;
  const Eigen::Index rank = detail::bareiss_eliminate(m, sign);
  if (rank < m.rows()) return Scalar(0);
  const Scalar& last = m(m.rows() - 1, m.cols() - 1);
  return sign > 0 ? last : Scalar(0) - last;
}

/// Gauss-Jordan inverse.  Throws DivisionByZero on a singular matrix.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> exact_inverse(
    const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  if (a.rows() != a.cols()) throw Error(Errc::NotSquare, "inverse of a non-square matrix");
  const Eigen::Index n = a.rows();
  Mat m = a;
  Mat inv = Mat::Identity(n, n);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && detail::exact_zero(m(pivot, col))) ++pivot;
    if (pivot == n) throw Error(Errc::DivisionByZero, "matrix is singular");
    if (pivot != col) {
      m.row(pivot).swap(m.row(col));
      inv.row(pivot).swap(inv.row(col));
    }
    const Scalar scale = Scalar(1) / m(col, col);
    for (Eigen::Index j = 0; j < n; ++j) {
      m(col, j) = m(col, j) * scale;
      inv(col, j) = inv(col, j) * scale;
    }
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == col || detail::exact_zero(m(i, col))) continue;
      const Scalar factor = m(i, col);
      for (Eigen::Index j = 0; j < n; ++j) {
        m(i, j) = m(i, j) - factor * m(col, j);
        inv(i, j) = inv(i, j) - factor * inv(col, j);
      }
    }
  }
  return inv;
}

}  // namespace smatrix
