/*
 *   Copyright 2026 The diffbrauer Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "diffbrauer/error.hpp"
#include "diffbrauer/polynomial.hpp"
#include "diffbrauer/rational.hpp"
#include "diffbrauer/rational_function.hpp"

namespace diffbrauer {

/// Dense row-major matrix over a field F.
template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, F(0)) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<F> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) fail(ErrorCode::DimensionMismatch, "matrix entry count does not match its shape");
  }
  /// Row-major nested initializer, handy in tests.
  Matrix(std::initializer_list<std::initializer_list<F>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
      if (r.size() != cols_) fail(ErrorCode::DimensionMismatch, "ragged matrix rows");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }
  static Matrix scalar(std::size_t n, const F& c) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
    return m;
  }
  /// The matrix unit e_{ij} (0-based indices).
  static Matrix unit(std::size_t n, std::size_t i, std::size_t j) {
    Matrix m(n, n);
    m(i, j) = F(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const std::vector<F>& data() const { return data_; }

  F& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const {
    for (const F& e : data_)
      if (!e.is_zero()) return false;
    return true;
  }
  /// c·I for some c.
  bool is_scalar() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        if (i != j && !(*this)(i, j).is_zero()) return false;
        if (i == j && !((*this)(i, i) == (*this)(0, 0))) return false;
      }
    return true;
  }

  F trace() const {
    F t(0);
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  template <class Fn>
  auto map(Fn&& fn) const -> Matrix<decltype(fn(std::declval<const F&>()))> {
    using G = decltype(fn(std::declval<const F&>()));
    std::vector<G> out;
    out.reserve(data_.size());
    for (const F& e : data_) out.push_back(fn(e));
    return Matrix<G>(rows_, cols_, std::move(out));
  }

  Matrix operator-() const {
    return map([](const F& e) { return -e; });
  }
  Matrix& operator+=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) fail(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const F& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const F& bkj = b(k, j);
          if (!bkj.is_zero()) c(i, j) += aik * bkj;
        }
      }
    return c;
  }
  friend Matrix operator*(const F& s, const Matrix& m) {
    return m.map([&](const F& e) { return s * e; });
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  Matrix pow(unsigned e) const {
    if (!is_square()) fail(ErrorCode::DimensionMismatch, "power of a non-square matrix");
    Matrix result = identity(rows_), base = *this;
    while (e) {
      if (e & 1U) result = result * base;
      e >>= 1U;
      if (e) base = base * base;
    }
    return result;
  }

 private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorCode::DimensionMismatch, "matrix shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> data_;
};

/// Kronecker product with (X⊗W)[i*m + k, j*m' + l] = X[i,j]·W[k,l].
template <class F>
Matrix<F> kron(const Matrix<F>& a, const Matrix<F>& b) {
  Matrix<F> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

/// Gauss-Jordan inverse over a field; throws Singular.
template <class F>
Matrix<F> inverse(const Matrix<F>& m) {
  if (!m.is_square()) fail(ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<F> a = m, inv = Matrix<F>::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) fail(ErrorCode::Singular, "matrix is singular");
    if (p != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(p, j), a(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    const F piv = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a(r, c).is_zero()) continue;
      const F f = a(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

template <class F>
F determinant(Matrix<F> a) {
  if (!a.is_square()) fail(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  const std::size_t n = a.rows();
  F det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return F(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c).is_zero()) continue;
      const F f = a(r, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(r, j) -= f * a(c, j);
    }
  }
  return det;
}

/// Reduced row echelon form in place; returns the pivot columns.
template <class F>
std::vector<std::size_t> rref(Matrix<F>& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < a.cols() && row < a.rows(); ++c) {
    std::size_t p = row;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(row, j));
    const F piv = a(row, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(row, j) /= piv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, c).is_zero()) continue;
      const F f = a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(r, j) -= f * a(row, j);
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

template <class F>
std::size_t rank(Matrix<F> a) {
  return rref(a).size();
}

/// Basis of { v : A v = 0 }, one column vector per entry.
template <class F>
std::vector<std::vector<F>> nullspace(Matrix<F> a) {
  const std::size_t n = a.cols();
  const std::vector<std::size_t> pivots = rref(a);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(n, F(0));
    v[free] = F(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// det(tI - M) via similarity reduction to upper Hessenberg form followed by
/// the standard three-term recurrence on leading principal minors.
template <class F>
UPoly<F> char_poly(const Matrix<F>& m) {
  if (!m.is_square()) fail(ErrorCode::DimensionMismatch, "characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<F> h = m;
  for (std::size_t c = 1; c + 1 < n; ++c) {
    std::size_t p = c;
    while (p < n && h(p, c - 1).is_zero()) ++p;
    if (p == n) continue;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(p, j), h(c, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(h(i, p), h(i, c));
    }
    const F piv = h(c, c - 1);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (h(i, c - 1).is_zero()) continue;
      const F u = h(i, c - 1) / piv;
      for (std::size_t j = 0; j < n; ++j) h(i, j) -= u * h(c, j);
      for (std::size_t r = 0; r < n; ++r) h(r, c) += u * h(r, i);
    }
  }
  std::vector<UPoly<F>> p(n + 1);
  p[0] = UPoly<F>(F(1));
  const UPoly<F> t = UPoly<F>::variable();
  for (std::size_t k = 1; k <= n; ++k) {
    p[k] = (t - UPoly<F>(h(k - 1, k - 1))) * p[k - 1];
    F prod(1);
    for (std::size_t i = 1; i < k; ++i) {
      prod *= h(k - i, k - i - 1);
      if (prod.is_zero()) break;
      p[k] -= UPoly<F>(prod * h(k - i - 1, k - 1)) * p[k - i - 1];
    }
  }
  return p[n];
}

using QMatrix = Matrix<Rational>;
using RFMatrix = Matrix<RationalFunction>;

inline RFMatrix lift(const QMatrix& m) {
  return m.map([](const Rational& r) { return RationalFunction(r); });
}
/// The rational matrix when every entry is constant.
std::optional<QMatrix> constant_part(const RFMatrix& m);

}  // namespace diffbrauer
