#pragma once

// Dense matrices over an exact field and the handful of eliminations we need:
// rank, kernel basis, inverse. Everything is Gaussian elimination; sizes here
// stay in the tens.

#include "crystal_grid/field.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace crystal_grid {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <Field F>
using FieldMatrix = Matrix<typename F::value_type>;

template <Field F>
FieldMatrix<F> zero_matrix(const F& field, std::size_t rows, std::size_t cols) {
  return FieldMatrix<F>(rows, cols, field.zero());
}

template <Field F>
FieldMatrix<F> identity_matrix(const F& field, std::size_t n) {
  auto m = zero_matrix(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

template <Field F>
FieldMatrix<F> from_ints(const F& field, std::size_t rows, std::size_t cols,
                         const std::vector<std::int64_t>& row_major) {
  if (row_major.size() != rows * cols) {
    throw std::invalid_argument("from_ints: entry count does not match shape");
  }
  auto m = zero_matrix(field, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = field.from_int(row_major[r * cols + c]);
  return m;
}

template <Field F>
bool is_zero_matrix(const F& field, const FieldMatrix<F>& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!field.is_zero(m(r, c))) return false;
  return true;
}

template <Field F>
FieldMatrix<F> multiply(const F& field, const FieldMatrix<F>& a, const FieldMatrix<F>& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("multiply: inner dimensions " + std::to_string(a.cols()) +
                                " and " + std::to_string(b.rows()) + " differ");
  }
  auto out = zero_matrix(field, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (field.is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out(i, j) = field.add(out(i, j), field.mul(a(i, k), b(k, j)));
    }
  return out;
}

template <Field F>
FieldMatrix<F> add(const F& field, const FieldMatrix<F>& a, const FieldMatrix<F>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("add: shape mismatch");
  }
  auto out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = field.add(a(i, j), b(i, j));
  return out;
}

template <Field F>
FieldMatrix<F> negate(const F& field, const FieldMatrix<F>& a) {
  auto out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = field.neg(a(i, j));
  return out;
}

template <class T>
Matrix<T> transpose(const Matrix<T>& a) {
  if (a.rows() == 0 || a.cols() == 0) return Matrix<T>(a.cols(), a.rows(), T{});
  Matrix<T> out(a.cols(), a.rows(), a(0, 0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

/// [a b]; both must have the same row count.
template <Field F>
FieldMatrix<F> hconcat(const F& field, const FieldMatrix<F>& a, const FieldMatrix<F>& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hconcat: row counts differ");
  auto out = zero_matrix(field, a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
  }
  return out;
}

/// [a; b]; both must have the same column count.
template <Field F>
FieldMatrix<F> vconcat(const F& field, const FieldMatrix<F>& a, const FieldMatrix<F>& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vconcat: column counts differ");
  auto out = zero_matrix(field, a.rows() + b.rows(), a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) out(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i) out(a.rows() + i, j) = b(i, j);
  }
  return out;
}

/// Copy of rows [r0, r0+nr) and columns [c0, c0+nc).
template <class T>
Matrix<T> submatrix(const Matrix<T>& a, std::size_t r0, std::size_t nr, std::size_t c0,
                    std::size_t nc) {
  if (r0 + nr > a.rows() || c0 + nc > a.cols()) {
    throw std::out_of_range("submatrix: block exceeds matrix");
  }
  Matrix<T> out(nr, nc, T{});
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) out(i, j) = a(r0 + i, c0 + j);
  return out;
}

/// Reduced row echelon form in place; returns the pivot columns.
template <Field F>
std::vector<std::size_t> row_reduce(const F& field, FieldMatrix<F>& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && field.is_zero(m(pivot, col))) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(row, j));
    const auto scale = field.inv(m(row, col));
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = field.mul(m(row, j), scale);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || field.is_zero(m(r, col))) continue;
      const auto factor = m(r, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        m(r, j) = field.sub(m(r, j), field.mul(factor, m(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <Field F>
std::size_t rank(const F& field, FieldMatrix<F> m) {
  return row_reduce(field, m).size();
}

/// Columns of the returned matrix form a basis of ker(m).
template <Field F>
FieldMatrix<F> kernel_basis(const F& field, FieldMatrix<F> m) {
  const auto pivots = row_reduce(field, m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  const std::size_t nullity = m.cols() - pivots.size();
  auto basis = zero_matrix(field, m.cols(), nullity);
  std::size_t k = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis(free, k) = field.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], k) = field.neg(m(r, free));
    ++k;
  }
  return basis;
}

template <Field F>
std::optional<FieldMatrix<F>> inverse(const F& field, const FieldMatrix<F>& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  auto aug = hconcat(field, m, identity_matrix(field, n));
  const auto pivots = row_reduce(field, aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
  return submatrix(aug, 0, n, n, n);
}

}  // namespace crystal_grid
