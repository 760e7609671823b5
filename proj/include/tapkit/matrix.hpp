#pragma once

// Dense row-major matrices over an arbitrary ring.

#include <cstddef>
#include <vector>

#include "tapkit/error.hpp"
#include "tapkit/poly.hpp"

namespace tapkit {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  friend Matrix operator+(const Matrix& x, const Matrix& y) {
    check_same(x, y);
    Matrix r = x;
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = r.a_[i] + y.a_[i];
    return r;
  }
  friend Matrix operator-(const Matrix& x, const Matrix& y) {
    check_same(x, y);
    Matrix r = x;
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = r.a_[i] - y.a_[i];
    return r;
  }
  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.rows_) throw Error(Errc::DimensionError, "matrix product shape mismatch");
    Matrix r(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        const T& xik = x(i, k);
        if (detail::coeff_is_zero(xik)) continue;
        for (std::size_t j = 0; j < y.cols_; ++j) r(i, j) = r(i, j) + xik * y(k, j);
      }
    return r;
  }
  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }
  friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

  Matrix scaled(const T& s) const {
    Matrix r = *this;
    for (auto& v : r.a_) v = v * s;
    return r;
  }

  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  Matrix submatrix(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
    Matrix r(rs.size(), cs.size());
    for (std::size_t i = 0; i < rs.size(); ++i)
      for (std::size_t j = 0; j < cs.size(); ++j) r(i, j) = (*this)(rs[i], cs[j]);
    return r;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix r(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) r(i, j) = (*this)(r0 + i, c0 + j);
    return r;
  }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!((*this)(i, j) == (i == j ? T(1) : T(0)))) return false;
    return true;
  }

  template <class F>
  auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    Matrix<decltype(f(std::declval<const T&>()))> r(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(i, j) = f((*this)(i, j));
    return r;
  }

 private:
  static void check_same(const Matrix& x, const Matrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw Error(Errc::DimensionError, "matrix shape mismatch");
  }
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

template <class T>
Matrix<T> matrix_power(const Matrix<T>& m, unsigned long e) {
  Matrix<T> r = Matrix<T>::identity(m.rows());
  Matrix<T> b = m;
  while (e > 0) {
    if (e & 1UL) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

// Fraction-free Bareiss determinant over an integral domain with exact_div.
template <class T>
T det_bareiss(Matrix<T> a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw Error(Errc::DimensionError, "determinant of non-square matrix");
  if (n == 0) return T(1);
  bool negate = false;
  T prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (detail::coeff_is_zero(a(k, k))) {
      std::size_t p = k + 1;
      while (p < n && detail::coeff_is_zero(a(p, k))) ++p;
      if (p == n) return T(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = exact_div(a(i, j) * a(k, k) - a(i, k) * a(k, j), prev);
    prev = a(k, k);
  }
  T d = a(n - 1, n - 1);
  return negate ? T(-d) : d;
}

// Gaussian-elimination determinant over a field.
template <class T>
T det_field(Matrix<T> a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw Error(Errc::DimensionError, "determinant of non-square matrix");
  T d(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && detail::coeff_is_zero(a(p, k))) ++p;
    if (p == n) return T(0);
    if (p != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(a(k, j), a(p, j));
      d = -d;
    }
    d = d * a(k, k);
    const T inv = T(1) / a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (detail::coeff_is_zero(a(i, k))) continue;
      const T f = a(i, k) * inv;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = a(i, j) - f * a(k, j);
    }
  }
  return d;
}

// Rank over a field.
template <class T>
std::size_t rank_field(Matrix<T> a) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && detail::coeff_is_zero(a(p, c))) ++p;
    if (p == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(p, j));
    const T inv = T(1) / a(r, c);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (detail::coeff_is_zero(a(i, c))) continue;
      const T f = a(i, c) * inv;
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) = a(i, j) - f * a(r, j);
    }
    ++r;
  }
  return r;
}

// Inverse over a field; throws DivideByZero when singular.
template <class T>
Matrix<T> inverse_field(Matrix<T> a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw Error(Errc::DimensionError, "inverse of non-square matrix");
  Matrix<T> inv = Matrix<T>::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && detail::coeff_is_zero(a(p, k))) ++p;
    if (p == n) throw Error(Errc::DivideByZero, "singular matrix");
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a(k, j), a(p, j));
      std::swap(inv(k, j), inv(p, j));
    }
    const T s = T(1) / a(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) = a(k, j) * s;
      inv(k, j) = inv(k, j) * s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || detail::coeff_is_zero(a(i, k))) continue;
      const T f = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) = a(i, j) - f * a(k, j);
        inv(i, j) = inv(i, j) - f * inv(k, j);
      }
    }
  }
  return inv;
}

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

}  // namespace tapkit
