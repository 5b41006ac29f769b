#pragma once

// Dense exact linear algebra over a field. Entries are expected to be an
// exact type (Rational); no pivoting heuristics beyond "first nonzero".

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "weylkit/error.hpp"
#include "weylkit/rational.hpp"

namespace weylkit {

template <class Field>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Field& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Field& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Field> row(std::size_t r) const {
    return {data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_};
  }

  void append_row(const std::vector<Field>& values) {
    if (rows_ == 0 && cols_ == 0) cols_ = values.size();
    if (values.size() != cols_) throw SizeMismatch("row length does not match matrix width");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
  }

  Matrix transposed() const {
    Matrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Field> data_;
};

template <class Field>
struct RowEchelon {
  Matrix<Field> reduced;               // reduced row echelon form
  std::vector<std::size_t> pivots;     // pivot column of each nonzero row
  std::size_t rank() const noexcept { return pivots.size(); }
};

/// Gauss-Jordan elimination to reduced row echelon form.
template <class Field>
RowEchelon<Field> row_reduce(Matrix<Field> m) {
  RowEchelon<Field> out;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t r = pivot_row;
    while (r < rows && sgn(m(r, c)) == 0) ++r;
    if (r == rows) continue;
    if (r != pivot_row)
      for (std::size_t k = 0; k < cols; ++k) std::swap(m(r, k), m(pivot_row, k));
    const Field inv = Field(1) / m(pivot_row, c);
    for (std::size_t k = c; k < cols; ++k)
      if (sgn(m(pivot_row, k)) != 0) m(pivot_row, k) *= inv;
    // Columns right of c that are nonzero in the pivot row; elimination only touches these.
    std::vector<std::size_t> support;
    for (std::size_t k = c; k < cols; ++k)
      if (sgn(m(pivot_row, k)) != 0) support.push_back(k);
    for (std::size_t other = 0; other < rows; ++other) {
      if (other == pivot_row || sgn(m(other, c)) == 0) continue;
      const Field factor = m(other, c);
      for (std::size_t k : support) m(other, k) -= factor * m(pivot_row, k);
    }
    out.pivots.push_back(c);
    ++pivot_row;
  }
  out.reduced = std::move(m);
  return out;
}

template <class Field>
std::size_t rank(const Matrix<Field>& m) {
  return row_reduce(m).rank();
}

/// Basis of the right kernel {v : m v = 0}, one vector per free column, with
/// the free coordinate set to 1.
template <class Field>
std::vector<std::vector<Field>> kernel_basis(const Matrix<Field>& m) {
  const auto ech = row_reduce(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  std::vector<std::vector<Field>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Field> v(cols);
    v[free] = 1;
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) v[ech.pivots[i]] = -ech.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class Field>
Field determinant(Matrix<Field> m) {
  if (m.rows() != m.cols()) throw SizeMismatch("determinant of a non-square matrix");
  const std::size_t size = m.rows();
  Field det = 1;
  for (std::size_t c = 0; c < size; ++c) {
    std::size_t r = c;
    while (r < size && sgn(m(r, c)) == 0) ++r;
    if (r == size) return Field(0);
    if (r != c) {
      for (std::size_t k = 0; k < size; ++k) std::swap(m(r, k), m(c, k));
      det = -det;
    }
    det *= m(c, c);
    const Field inv = Field(1) / m(c, c);
    for (std::size_t other = c + 1; other < size; ++other) {
      if (sgn(m(other, c)) == 0) continue;
      const Field factor = m(other, c) * inv;
      for (std::size_t k = c; k < size; ++k) m(other, k) -= factor * m(c, k);
    }
  }
  return det;
}

/// Solves m x = rhs. Returns nullopt when the system is inconsistent; when it
/// is underdetermined the free coordinates are set to 0.
template <class Field>
std::optional<std::vector<Field>> solve(const Matrix<Field>& m, const std::vector<Field>& rhs) {
  if (rhs.size() != m.rows()) throw SizeMismatch("right-hand side length does not match matrix");
  Matrix<Field> augmented(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) augmented(r, c) = m(r, c);
    augmented(r, m.cols()) = rhs[r];
  }
  const auto ech = row_reduce(std::move(augmented));
  std::vector<Field> x(m.cols());
  for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
    if (ech.pivots[i] == m.cols()) return std::nullopt;
    x[ech.pivots[i]] = ech.reduced(i, m.cols());
  }
  return x;
}

/// True when the row spaces of a and b coincide.
template <class Field>
bool same_row_space(const Matrix<Field>& a, const Matrix<Field>& b) {
  if (a.cols() != b.cols()) throw SizeMismatch("row spaces live in different ambient spaces");
  Matrix<Field> both = a;
  for (std::size_t r = 0; r < b.rows(); ++r) both.append_row(b.row(r));
  const auto ra = rank(a);
  return ra == rank(b) && ra == rank(both);
}

}  // namespace weylkit
