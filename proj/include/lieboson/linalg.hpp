#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lieboson/errors.hpp"

namespace lieboson {

/// Dense row-major matrix over an exact field.
template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  F& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const F& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<F> row(std::size_t r) const {
    return std::vector<F>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  }
  std::vector<F> column(std::size_t c) const {
    std::vector<F> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  Matrix operator*(const Matrix& o) const {
    Matrix out(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const F& a = (*this)(i, k);
        if (is_zero(a)) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) {
          if (is_zero(o(k, j))) continue;
          out(i, j) += a * o(k, j);
        }
      }
    return out;
  }

  std::vector<F> apply(const std::vector<F>& v) const {
    std::vector<F> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        if (is_zero((*this)(i, k)) || is_zero(v[k])) continue;
        out[i] += (*this)(i, k) * v[k];
      }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> data_;
};

template <class F>
struct RrefResult {
  Matrix<F> reduced;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank() const { return pivot_columns.size(); }
};

/// Reduced row echelon form by exact elimination. Among candidate pivots in a
/// column the one with the fewest terms is chosen (ties: lowest row).
template <class F>
RrefResult<F> rref(Matrix<F> m) {
  RrefResult<F> out;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::optional<std::size_t> best;
    for (std::size_t r = lead_row; r < m.rows(); ++r) {
      if (is_zero(m(r, c))) continue;
      if (!best || pivot_cost(m(r, c)) < pivot_cost(m(*best, c))) best = r;
    }
    if (!best) continue;
    if (*best != lead_row)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(*best, k), m(lead_row, k));
    const F inv = m(lead_row, c).inverse();
    for (std::size_t k = c; k < m.cols(); ++k)
      if (!is_zero(m(lead_row, k))) m(lead_row, k) = m(lead_row, k) * inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || is_zero(m(r, c))) continue;
      const F factor = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k)
        if (!is_zero(m(lead_row, k))) m(r, k) = m(r, k) - factor * m(lead_row, k);
    }
    out.pivot_columns.push_back(c);
    ++lead_row;
  }
  out.reduced = std::move(m);
  return out;
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
  return rref(m).rank();
}

/// Basis of {x : m x = 0}; one vector per free column, with a 1 in that column.
template <class F>
std::vector<std::vector<F>> nullspace(const Matrix<F>& m) {
  const auto r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : r.pivot_columns) is_pivot[c] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(m.cols());
    v[free] = F(1);
    for (std::size_t i = 0; i < r.pivot_columns.size(); ++i)
      v[r.pivot_columns[i]] = -r.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Solves a x = b; nullopt when inconsistent. Free variables are set to zero.
template <class F>
std::optional<std::vector<F>> solve(const Matrix<F>& a, const std::vector<F>& b) {
  Matrix<F> aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const auto r = rref(std::move(aug));
  std::vector<F> x(a.cols());
  for (std::size_t i = 0; i < r.pivot_columns.size(); ++i) {
    if (r.pivot_columns[i] == a.cols()) return std::nullopt;
    x[r.pivot_columns[i]] = r.reduced(i, a.cols());
  }
  return x;
}

template <class F>
Matrix<F> inverse(const Matrix<F>& a) {
  const std::size_t n = a.rows();
  Matrix<F> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = F(1);
  }
  const auto r = rref(std::move(aug));
  if (r.rank() < n || r.pivot_columns[n - 1] != n - 1)
    throw ZeroDivision("singular matrix");
  Matrix<F> out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = r.reduced(i, n + j);
  return out;
}

/// Row-reduced basis of the span of the given vectors (zero rows dropped).
template <class F>
std::vector<std::vector<F>> row_space(const std::vector<std::vector<F>>& vectors,
                                      std::size_t dim) {
  if (vectors.empty()) return {};
  Matrix<F> m(vectors.size(), dim);
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = vectors[i][j];
  const auto r = rref(std::move(m));
  std::vector<std::vector<F>> out;
  for (std::size_t i = 0; i < r.rank(); ++i) out.push_back(r.reduced.row(i));
  return out;
}

}  // namespace lieboson
