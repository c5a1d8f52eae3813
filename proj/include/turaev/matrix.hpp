#pragma once

#include <cassert>
#include <cstddef>
#include <utility>
#include <vector>

#include "turaev/error.hpp"
#include "turaev/field.hpp"

namespace turaev {

template <Field K>
using Vec = std::vector<K>;

/// Dense row-major matrix over an exact field.
template <Field K>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  K& operator()(std::size_t i, std::size_t j) {
    assert(i < rows_ && j < cols_);
    return a_[i * cols_ + j];
  }
  const K& operator()(std::size_t i, std::size_t j) const {
    assert(i < rows_ && j < cols_);
    return a_[i * cols_ + j];
  }

  Vec<K> row(std::size_t i) const {
    assert(i < rows_);
    return Vec<K>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
  }
  void set_row(std::size_t i, const Vec<K>& v) {
    assert(i < rows_ && v.size() == cols_);
    std::copy(v.begin(), v.end(), a_.begin() + i * cols_);
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  K trace() const {
    if (rows_ != cols_) throw DimensionError("trace of a non-square matrix");
    K t;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  bool is_zero() const {
    for (const K& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }
  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(i, j) != (i == j ? K(1) : K())) return false;
    return true;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      throw DimensionError("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const K& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend Matrix operator*(const K& s, Matrix m) {
    for (K& x : m.a_) x = s * x;
    return m;
  }

  /// Matrix-vector product (column vector convention).
  Vec<K> apply(const Vec<K>& v) const {
    if (v.size() != cols_) throw DimensionError("matrix apply shape mismatch");
    Vec<K> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        if ((*this)(i, j).is_zero()) continue;
        out[i] += (*this)(i, j) * v[j];
      }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw DimensionError("matrix shape mismatch");
  }

  std::size_t rows_, cols_;
  std::vector<K> a_;
};

// ---- vector helpers ----

template <Field K>
Vec<K> basis_vector(std::size_t n, std::size_t i) {
  Vec<K> v(n);
  v.at(i) = K(1);
  return v;
}

template <Field K>
bool vec_is_zero(const Vec<K>& v) {
  for (const K& x : v)
    if (!x.is_zero()) return false;
  return true;
}

template <Field K>
Vec<K>& vec_add_scaled(Vec<K>& v, const K& s, const Vec<K>& w) {
  assert(v.size() == w.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += s * w[i];
  return v;
}

template <Field K>
Vec<K> vec_add(Vec<K> a, const Vec<K>& b) {
  if (a.size() != b.size()) throw DimensionError("vector sum shape mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

template <Field K>
Vec<K> vec_sub(Vec<K> a, const Vec<K>& b) {
  if (a.size() != b.size()) throw DimensionError("vector difference shape mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

template <Field K>
Vec<K> vec_scale(const K& s, Vec<K> v) {
  for (K& x : v) x = s * x;
  return v;
}

template <Field K>
K dot(const Vec<K>& a, const Vec<K>& b) {
  if (a.size() != b.size()) throw DimensionError("dot product shape mismatch");
  K t;
  for (std::size_t i = 0; i < a.size(); ++i) t += a[i] * b[i];
  return t;
}

/// Flattened tensor product: entry (i, j) of a⊗b at index i*|b| + j.
template <Field K>
Vec<K> outer(const Vec<K>& a, const Vec<K>& b) {
  Vec<K> t(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) t[i * b.size() + j] = a[i] * b[j];
  }
  return t;
}

// ---- row reduction ----

template <Field K>
struct RrefResult {
  Matrix<K> mat;
  std::vector<std::size_t> pivots;  // strictly increasing column indices
};

/// Reduced row-echelon form by exact Gauss-Jordan elimination. The row
/// space is preserved; pivot entries are 1 and are the only nonzero
/// entries in their columns.
template <Field K>
RrefResult<K> rref(Matrix<K> m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    std::size_t sel = r;
    while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != r) {
      Vec<K> tmp = m.row(sel);
      m.set_row(sel, m.row(r));
      m.set_row(r, tmp);
    }
    const K inv = K(1) / m(r, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(r, j) = inv * m(r, j);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, col).is_zero()) continue;
      const K f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(col);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

template <Field K>
std::size_t rank(const Matrix<K>& m) {
  return rref(m).pivots.size();
}

/// Exact inverse via Gauss-Jordan on [m | I]. Throws SingularMatrixError
/// when rank(m) < dim.
template <Field K>
Matrix<K> invert(const Matrix<K>& m) {
  if (m.rows() != m.cols()) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<K> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = K(1);
  }
  RrefResult<K> red = rref(std::move(aug));
  if (red.pivots.size() != n || (n > 0 && red.pivots.back() != n - 1))
    throw SingularMatrixError("matrix is singular");
  Matrix<K> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = red.mat(i, n + j);
  return inv;
}

}  // namespace turaev
