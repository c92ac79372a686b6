#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "skw/error.hpp"
#include "skw/numerics/exact_complex.hpp"

namespace skw {

/// Dense row-major matrix over an exact field (Rational or ExactComplex).
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = T(1);
    return m;
  }

  /// Builds a matrix whose rows are the given vectors.
  static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw Error(Errc::dimension_mismatch, "row length mismatch");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> row(std::size_t r) const {
    return std::vector<T>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  }
  std::vector<T> col(std::size_t c) const {
    std::vector<T> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool is_zero() const {
    for (const auto& v : data_)
      if (!skw::is_zero(v)) return false;
    return true;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(Errc::dimension_mismatch, "matrix product shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& lhs = a(r, k);
        if (skw::is_zero(lhs)) continue;
        for (std::size_t c = 0; c < b.cols_; ++c) out(r, c) += lhs * b(k, c);
      }
    return out;
  }

  friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v) {
    if (a.cols_ != v.size()) throw Error(Errc::dimension_mismatch, "matrix-vector shape mismatch");
    std::vector<T> out(a.rows_, T(0));
    for (std::size_t r = 0; r < a.rows_; ++r)
      for (std::size_t c = 0; c < a.cols_; ++c) out[r] += a(r, c) * v[c];
    return out;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    check_same_shape(a, b);
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] += b.data_[k];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    check_same_shape(a, b);
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] -= b.data_[k];
    return a;
  }
  friend Matrix operator-(Matrix a) {
    for (auto& v : a.data_) v = -v;
    return a;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  static void check_same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw Error(Errc::dimension_mismatch, "matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using ExactMatrix = Matrix<ExactComplex>;
using RationalMatrix = Matrix<Rational>;

template <class T>
struct RowEchelon {
  Matrix<T> reduced;               ///< nonzero rows only
  std::vector<std::size_t> pivots;  ///< pivot column of each row
};

/// Reduced row-echelon form; zero rows are dropped.
template <class T>
RowEchelon<T> rref(Matrix<T> m) {
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t p = lead_row;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != lead_row)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(lead_row, k));
    const T inv = T(1) / m(lead_row, c);
    for (std::size_t k = c; k < m.cols(); ++k) m(lead_row, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || is_zero(m(r, c))) continue;
      const T factor = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k) m(r, k) -= factor * m(lead_row, k);
    }
    pivots.push_back(c);
    ++lead_row;
  }
  Matrix<T> reduced(lead_row, m.cols());
  for (std::size_t r = 0; r < lead_row; ++r)
    for (std::size_t k = 0; k < m.cols(); ++k) reduced(r, k) = std::move(m(r, k));
  return {std::move(reduced), std::move(pivots)};
}

template <class T>
std::size_t rank(const Matrix<T>& m) {
  return rref(m).pivots.size();
}

/// Basis of {x : m x = 0}, one vector per free column.
template <class T>
std::vector<std::vector<T>> nullspace(const Matrix<T>& m) {
  const auto ech = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(m.cols(), T(0));
    v[free] = T(1);
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) v[ech.pivots[r]] = -ech.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw Error(Errc::dimension_mismatch, "inverse of non-square matrix");
  Matrix<T> aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = T(1);
  }
  auto ech = rref(std::move(aug));
  if (ech.pivots.size() < n || ech.pivots[n - 1] != n - 1)
    throw Error(Errc::degenerate_form, "matrix is singular");
  Matrix<T> inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = ech.reduced(r, n + c);
  return inv;
}

/// Rational matrix viewed over the Gaussian rationals.
inline ExactMatrix to_exact(const RationalMatrix& m) {
  ExactMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = ExactComplex(m(r, c));
  return out;
}

/// Real 2m x 2m matrix [[A, -B], [B, A]] of the complex-linear map A + iB.
inline RationalMatrix realify(const ExactMatrix& m) {
  const std::size_t r = m.rows(), c = m.cols();
  RationalMatrix out(2 * r, 2 * c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      out(i, j) = m(i, j).re();
      out(i + r, j + c) = m(i, j).re();
      out(i, j + c) = -m(i, j).im();
      out(i + r, j) = m(i, j).im();
    }
  return out;
}

/// (Re v, Im v) stacked.
inline std::vector<Rational> realify(const std::vector<ExactComplex>& v) {
  std::vector<Rational> out(2 * v.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    out[k] = v[k].re();
    out[k + v.size()] = v[k].im();
  }
  return out;
}

inline std::vector<ExactComplex> complexify(const std::vector<Rational>& v) {
  const std::size_t m = v.size() / 2;
  std::vector<ExactComplex> out(m);
  for (std::size_t k = 0; k < m; ++k) out[k] = ExactComplex(v[k], v[k + m]);
  return out;
}

}  // namespace skw
