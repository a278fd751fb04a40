#pragma once

#include <cstddef>
#include <vector>

#include "nbasis/error.hpp"

namespace nbasis {

// Dense row-major matrix over a field-like type F.
template <class F>
struct Matrix {
  using Elem = typename F::Elem;
  std::size_t rows = 0, cols = 0;
  std::vector<Elem> data;

  Matrix() = default;
  Matrix(const F& f, std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, f.zero()) {}
  Elem& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const Elem& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

namespace detail {

// Gauss-Jordan on an augmented matrix; returns the rank of the left `ncols` block.
template <class F>
std::size_t gauss_jordan(const F& f, Matrix<F>& m, std::size_t ncols) {
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.rows; ++col) {
    std::size_t piv = row;
    while (piv < m.rows && f.is_zero(m.at(piv, col))) ++piv;
    if (piv == m.rows) continue;
    if (piv != row)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(row, j));
    const auto iv = f.inv(m.at(row, col));
    for (std::size_t j = 0; j < m.cols; ++j) m.at(row, j) = f.mul(iv, m.at(row, j));
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == row || f.is_zero(m.at(r, col))) continue;
      const auto c = m.at(r, col);
      for (std::size_t j = 0; j < m.cols; ++j) m.at(r, j) = f.sub(m.at(r, j), f.mul(c, m.at(row, j)));
    }
    ++row;
  }
  return row;
}

}  // namespace detail

template <class F>
std::size_t matrix_rank(const F& f, Matrix<F> m) {
  return detail::gauss_jordan(f, m, m.cols);
}

template <class F>
Matrix<F> matrix_inverse(const F& f, const Matrix<F>& m) {
  if (m.rows != m.cols) raise(ErrorCode::SingularMatrix, "matrix is not square");
  const std::size_t n = m.rows;
  Matrix<F> aug(f, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = f.one();
  }
  if (detail::gauss_jordan(f, aug, n) != n) raise(ErrorCode::SingularMatrix, "matrix is singular");
  Matrix<F> inv(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

// Row vector times matrix: out_j = sum_i v_i m_{ij}.
template <class F>
std::vector<typename F::Elem> row_times(const F& f, const std::vector<typename F::Elem>& v, const Matrix<F>& m) {
  std::vector<typename F::Elem> out(m.cols, f.zero());
  for (std::size_t i = 0; i < m.rows; ++i) {
    if (f.is_zero(v[i])) continue;
    for (std::size_t j = 0; j < m.cols; ++j) out[j] = f.add(out[j], f.mul(v[i], m.at(i, j)));
  }
  return out;
}

}  // namespace nbasis
