#pragma once

#include <optional>
#include <vector>

#include "symlab/error.hpp"
#include "symlab/scalar.hpp"

namespace symlab {

/// Small dense row-major matrix over a Scalar.
template <Scalar S>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const S& proto)
      : rows_(rows), cols_(cols), zero_(proto.zero_like()), a_(rows * cols, zero_) {}

  static Matrix identity(std::size_t n, const S& proto) {
    Matrix m(n, n, proto);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = proto.one_like();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  S& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw InputError("matrix dimension mismatch");
    Matrix r(rows_, o.cols_, zero_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const S& x = (*this)(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) = r(i, j) + x * o(k, j);
      }
    return r;
  }

  std::vector<S> operator*(const std::vector<S>& v) const {
    if (cols_ != v.size()) throw InputError("matrix/vector dimension mismatch");
    std::vector<S> r(rows_, zero_.zero_like());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) r[i] = r[i] + (*this)(i, k) * v[k];
    return r;
  }

  Matrix operator*(const S& s) const {
    Matrix r = *this;
    for (auto& x : r.a_) x = x * s;
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.a_.size(); ++i)
      if (!(a.a_[i] == b.a_[i])) return false;
    return true;
  }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (i == j ? !(*this)(i, j).is_one() : !(*this)(i, j).is_zero()) return false;
    return true;
  }

  Matrix minor(std::size_t row, std::size_t col) const {
    Matrix m(rows_ - 1, cols_ - 1, zero_);
    for (std::size_t i = 0, r = 0; i < rows_; ++i) {
      if (i == row) continue;
      for (std::size_t j = 0, c = 0; j < cols_; ++j) {
        if (j == col) continue;
        m(r, c++) = (*this)(i, j);
      }
      ++r;
    }
    return m;
  }

  /// Division-free cofactor expansion for n <= 5, exact elimination beyond.
  S determinant() const {
    if (rows_ != cols_) throw InputError("determinant of a non-square matrix");
    if (rows_ == 0) return zero_.one_like();
    if (rows_ == 1) return a_[0];
    if (rows_ <= 5) {
      S det = zero_.zero_like();
      for (std::size_t j = 0; j < cols_; ++j) {
        if ((*this)(0, j).is_zero()) continue;
        S term = (*this)(0, j) * minor(0, j).determinant();
        det = (j % 2 == 0) ? det + term : det - term;
      }
      return det;
    }
    Matrix m = *this;
    S det = zero_.one_like();
    for (std::size_t c = 0; c < cols_; ++c) {
      std::size_t p = c;
      while (p < rows_ && m(p, c).is_zero()) ++p;
      if (p == rows_) return zero_.zero_like();
      if (p != c) {
        m.swap_rows(p, c);
        det = -det;
      }
      det = det * m(c, c);
      const S inv = m(c, c).one_like() / m(c, c);
      for (std::size_t r = c + 1; r < rows_; ++r) {
        if (m(r, c).is_zero()) continue;
        const S f = m(r, c) * inv;
        for (std::size_t k = c; k < cols_; ++k) m(r, k) = m(r, k) - f * m(c, k);
      }
    }
    return det;
  }

  /// Transposed cofactor matrix: adjugate() * A = det(A) * I.
  Matrix adjugate() const {
    if (rows_ != cols_) throw InputError("adjugate of a non-square matrix");
    Matrix adj(rows_, cols_, zero_);
    if (rows_ == 1) {
      adj(0, 0) = zero_.one_like();
      return adj;
    }
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        S c = minor(i, j).determinant();
        adj(j, i) = ((i + j) % 2 == 0) ? c : -c;
      }
    return adj;
  }

  /// Exact inverse by Gauss-Jordan elimination; nullopt when singular.
  std::optional<Matrix> inverse() const {
    if (rows_ != cols_) throw InputError("inverse of a non-square matrix");
    const std::size_t n = rows_;
    Matrix m = *this;
    Matrix inv = identity(n, zero_);
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t p = c;
      while (p < n && m(p, c).is_zero()) ++p;
      if (p == n) return std::nullopt;
      m.swap_rows(p, c);
      inv.swap_rows(p, c);
      const S pinv = m(c, c).one_like() / m(c, c);
      for (std::size_t k = 0; k < n; ++k) {
        m(c, k) = m(c, k) * pinv;
        inv(c, k) = inv(c, k) * pinv;
      }
      for (std::size_t r = 0; r < n; ++r) {
        if (r == c || m(r, c).is_zero()) continue;
        const S f = m(r, c);
        for (std::size_t k = 0; k < n; ++k) {
          m(r, k) = m(r, k) - f * m(c, k);
          inv(r, k) = inv(r, k) - f * inv(c, k);
        }
      }
    }
    return inv;
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
  }

 private:
  std::size_t rows_, cols_;
  S zero_;
  std::vector<S> a_;
};

}  // namespace symlab
