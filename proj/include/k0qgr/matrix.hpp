#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "k0qgr/polynomial.hpp"

namespace k0qgr {

/// Small dense row-major matrix.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{}) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n, T{0});
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: dimension mismatch");
    Matrix r(a.rows_, b.cols_, T{0});
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == T{0}) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }

  template <typename U, typename F>
  Matrix<U> map(F&& fn) const {
    Matrix<U> r(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(i, j) = fn((*this)(i, j));
    return r;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// det(tI - A) by Berkowitz's division-free algorithm.
inline IntPoly characteristic_polynomial(const Matrix<Int>& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("characteristic_polynomial: matrix must be square");
  // c holds the coefficients of the leading r x r block's polynomial in
  // descending powers: c[0] = 1.
  std::vector<Int> c{Int(1)};
  for (std::size_t r = 0; r < n; ++r) {
    // Toeplitz column: 1, -a_rr, -R S, -R A S, ..., -R A^{r-1} S
    std::vector<Int> toeplitz(r + 2);
    toeplitz[0] = 1;
    toeplitz[1] = -a(r, r);
    std::vector<Int> v(r);  // A_r^k S
    for (std::size_t i = 0; i < r; ++i) v[i] = a(i, r);
    for (std::size_t k = 2; k < r + 2; ++k) {
      Int rs = 0;
      for (std::size_t i = 0; i < r; ++i) rs += a(r, i) * v[i];
      toeplitz[k] = -rs;
      std::vector<Int> next(r);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) next[i] += a(i, j) * v[j];
      v = std::move(next);
    }
    std::vector<Int> nc(r + 2);
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j) nc[i] += toeplitz[i - j] * c[j];
    c = std::move(nc);
  }
  std::vector<Int> asc(c.rbegin(), c.rend());
  return IntPoly(std::move(asc));
}

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
inline Int determinant(Matrix<Int> m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("determinant: matrix must be square");
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m(p, k).is_zero()) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

}  // namespace k0qgr
