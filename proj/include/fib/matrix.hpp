#pragma once

#include <vector>

#include "fib/errors.hpp"
#include "fib/laurent.hpp"
#include "fib/rational.hpp"

namespace fib {

inline constexpr int kMaxMatrixSide = 64;

// Dense row-major matrix over an exact scalar type.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, T init = T{})
      : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, init) {
    if (rows < 0 || cols < 0) throw InternalError("negative matrix dimension");
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = unit_scalar();
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const T& operator()(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * cols_ + j];
  }

  bool is_zero() const {
    for (const T& v : a_)
      if (!(v == T{})) return false;
    return true;
  }

  Matrix transposed() const {
    Matrix m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InternalError("matrix product shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == T{}) continue;
        for (int j = 0; j < b.cols_; ++j) out(i, j) = out(i, j) + aik * b(k, j);
      }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
  }
  // row_i += q * row_j
  void addmul_row(int i, int j, const T& q) {
    for (int k = 0; k < cols_; ++k) (*this)(i, k) = (*this)(i, k) + q * (*this)(j, k);
  }
  // col_i += q * col_j
  void addmul_col(int i, int j, const T& q) {
    for (int k = 0; k < rows_; ++k) (*this)(k, i) = (*this)(k, i) + q * (*this)(k, j);
  }
  void scale_row(int i, const T& u) {
    for (int k = 0; k < cols_; ++k) (*this)(i, k) = (*this)(i, k) * u;
  }
  void scale_col(int j, const T& u) {
    for (int k = 0; k < rows_; ++k) (*this)(k, j) = (*this)(k, j) * u;
  }

 private:
  static T unit_scalar() {
    if constexpr (std::is_same_v<T, LaurentPoly>)
      return LaurentPoly::one();
    else
      return T(1);
  }

  int rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

using IntMatrix = Matrix<Integer>;
using LaurentMatrix = Matrix<LaurentPoly>;

}  // namespace fib
