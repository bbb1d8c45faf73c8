#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "filiform/scalar.hpp"

namespace filiform {

template <class S>
using Vec = std::vector<S>;

template <class S>
Vec<S> vec_zero(std::size_t n) {
  return Vec<S>(n, S(0));
}

template <class S>
bool vec_is_zero(const Vec<S>& v) {
  for (const S& x : v)
    if (!is_zero(x)) return false;
  return true;
}

template <class S>
Vec<S>& vec_add_inplace(Vec<S>& a, const Vec<S>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

template <class S>
Vec<S> vec_add(Vec<S> a, const Vec<S>& b) {
  return vec_add_inplace(a, b);
}

template <class S>
Vec<S> vec_sub(Vec<S> a, const Vec<S>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

template <class S>
Vec<S> vec_scale(const S& c, Vec<S> a) {
  for (S& x : a) x = x * c;
  return a;
}

template <class S>
Vec<S>& vec_axpy(Vec<S>& a, const S& c, const Vec<S>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += c * b[i];
  return a;
}

/// Plain coordinate dot product (no inner-product weighting).
template <class S>
S vec_dot(const Vec<S>& a, const Vec<S>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
  S r(0);
  for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
  return r;
}

/// Dense row-major matrix over an exact scalar field.
template <class S>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t r, std::size_t c) : rows_(r), cols_(c), data_(r * c, S(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = S(1);
    return m;
  }

  static Matrix diagonal(const Vec<S>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
    return m;
  }

  static Matrix from_rows(const std::vector<Vec<S>>& rows) {
    if (rows.empty()) return Matrix(0, 0);
    Matrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_)
        throw DimensionMismatch("ragged row list");
      for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix from_cols(const std::vector<Vec<S>>& cols) {
    return from_rows(cols).transpose();
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  S& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const S& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  Vec<S> row(std::size_t i) const {
    Vec<S> r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
  }

  Vec<S> col(std::size_t j) const {
    Vec<S> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  bool is_zero() const {
    for (const S& x : data_)
      if (!filiform::is_zero(x)) return false;
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw DimensionMismatch("matrix sizes differ");
    Matrix r = a;
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
    return r;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw DimensionMismatch("matrix sizes differ");
    Matrix r = a;
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
    return r;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (filiform::is_zero(a.at(i, k))) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          r.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    return r;
  }

  friend Matrix operator*(const S& c, const Matrix& a) {
    Matrix r = a;
    for (S& x : r.data_) x = c * x;
    return r;
  }

  Vec<S> apply(const Vec<S>& v) const {
    if (v.size() != cols_) throw DimensionMismatch("matrix apply shape");
    Vec<S> r(rows_, S(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        if (filiform::is_zero(at(i, j))) continue;
        r[i] += at(i, j) * v[j];
      }
    return r;
  }

  Matrix pow(std::size_t m) const {
    if (rows_ != cols_) throw DimensionMismatch("power of nonsquare matrix");
    Matrix r = identity(rows_);
    for (std::size_t i = 0; i < m; ++i) r = r * *this;
    return r;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<S> data_;
};

template <class S>
struct RrefResult {
  Matrix<S> mat;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

/// Reduced row echelon form with deterministic pivoting: leftmost nonzero
/// column, first nonzero row. No magnitude-based pivot selection.
template <class S>
RrefResult<S> rref(Matrix<S> m) {
  RrefResult<S> res;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && is_zero(m.at(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m.at(p, j), m.at(r, j));
    S inv = invert(m.at(r, c));
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(r, j) = inv * m.at(r, j);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m.at(i, c))) continue;
      S f = m.at(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j)
        m.at(i, j) -= f * m.at(r, j);
    }
    res.pivot_cols.push_back(c);
    ++r;
  }
  res.rank = r;
  res.mat = std::move(m);
  return res;
}

template <class S>
std::size_t rank(const Matrix<S>& m) {
  return rref(m).rank;
}

/// Kernel basis from the RREF free columns, in ascending free-column order.
template <class S>
std::vector<Vec<S>> nullspace(const Matrix<S>& m) {
  RrefResult<S> r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
  std::vector<Vec<S>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec<S> v(m.cols(), S(0));
    v[f] = S(1);
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
      v[r.pivot_cols[i]] = -r.mat.at(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// One exact solution of m x = b (free variables set to zero), or nullopt
/// when the system is inconsistent.
template <class S>
std::optional<Vec<S>> solve_linear(const Matrix<S>& m, const Vec<S>& b) {
  if (b.size() != m.rows())
    throw DimensionMismatch("right-hand side length mismatch");
  Matrix<S> aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  RrefResult<S> r = rref(std::move(aug));
  for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
    if (r.pivot_cols[i] == m.cols()) return std::nullopt;
  Vec<S> x(m.cols(), S(0));
  for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
    x[r.pivot_cols[i]] = r.mat.at(i, m.cols());
  return x;
}

template <class S>
S determinant(Matrix<S> m) {
  if (m.rows() != m.cols())
    throw DimensionMismatch("determinant of nonsquare matrix");
  S det(1);
  for (std::size_t c = 0; c < m.cols(); ++c) {
    std::size_t p = c;
    while (p < m.rows() && is_zero(m.at(p, c))) ++p;
    if (p == m.rows()) return S(0);
    if (p != c) {
      for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m.at(p, j), m.at(c, j));
      det = S(0) - det;
    }
    det = det * m.at(c, c);
    S inv = invert(m.at(c, c));
    for (std::size_t i = c + 1; i < m.rows(); ++i) {
      if (is_zero(m.at(i, c))) continue;
      S f = m.at(i, c) * inv;
      for (std::size_t j = c; j < m.cols(); ++j)
        m.at(i, j) -= f * m.at(c, j);
    }
  }
  return det;
}

/// Rational matrix/vector promotion into any scalar field.
template <class S>
Vec<S> promote_vec(const Vec<Rational>& v) {
  Vec<S> r;
  r.reserve(v.size());
  for (const Rational& q : v) r.push_back(from_rational<S>(q));
  return r;
}

template <class S>
Matrix<S> promote_matrix(const Matrix<Rational>& m) {
  Matrix<S> r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      r.at(i, j) = from_rational<S>(m.at(i, j));
  return r;
}

}  // namespace filiform
