#pragma once

// Dense row-major matrices over an exact commutative ring (Ratio, MPoly or
// QSeries) and the deterministic exact linear algebra built on them.

#include "qseries.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace orbiq {

template <typename T>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("Matrix: dimensions must be positive");
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<T>& data() const { return data_; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix product: shape mismatch");
    Matrix r(a.rows_, b.cols_, zero_like(a(0, 0)));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (is_zero(a(i, k))) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
      }
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<T> data_;
};

template <typename T>
Matrix<T> identity_like(std::size_t n, const T& proto) {
  Matrix<T> m(n, n, zero_like(proto));
  for (std::size_t i = 0; i < n; ++i) m(i, i) = one_like(proto);
  return m;
}

template <typename T>
Matrix<T> transpose(const Matrix<T>& m) {
  Matrix<T> r(m.cols(), m.rows(), m(0, 0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(j, i) = m(i, j);
  return r;
}

/// Fraction-free (Bareiss) determinant over an integral domain with exact division.
template <typename T>
T det_bareiss(Matrix<T> m) {
  if (!m.square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  T prev = one_like(m(0, 0));
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && is_zero(m(p, k))) ++p;
    if (p == n) return zero_like(m(0, 0));
    if (p != k) {
      m.swap_rows(p, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T num = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        m(i, j) = exact_div(num, prev);
      }
      m(i, k) = zero_like(prev);
    }
    prev = m(k, k);
  }
  T d = m(n - 1, n - 1);
  return negate ? -d : d;
}

inline Ratio det_exact(const Matrix<Ratio>& m) { return det_bareiss(m); }
inline MPoly det_exact(const Matrix<MPoly>& m) { return det_bareiss(m); }

/// Determinant of a truncated-series matrix.  Columns divisible by q are
/// factored first, so a matrix with a column of order q still yields its
/// order-q coefficient at truncation D = 1.
QSeries det_exact(const Matrix<QSeries>& m);

Matrix<Ratio> inverse(const Matrix<Ratio>& m);

struct LinearSolveResult {
  bool consistent = false;
  std::vector<Ratio> solution;    // particular solution, free variables = 0
  std::size_t kernel_dim = 0;
  std::vector<bool> determined;   // unknown j takes the same value on every solution
};

/// Exact Gauss-Jordan solve of A x = b.  Inconsistency is a result, not an error.
LinearSolveResult linear_solve_rational(const Matrix<Ratio>& a, const std::vector<Ratio>& b);

}  // namespace orbiq
