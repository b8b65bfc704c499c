/*! \file matrix.hpp
 *  \brief Dense matrices over integers and Laurent polynomials, with exact determinants.
 */

#pragma once

#include "longknot/laurent.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace longknot {

template <typename T>
class matrix {
 public:
  matrix() = default;

  matrix(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static matrix identity(std::size_t n, T one = T{1}) {
    matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  matrix transposed() const {
    matrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols_; ++j)
      std::swap((*this)(a, j), (*this)(b, j));
  }

  bool operator==(const matrix& other) const = default;

  friend matrix operator*(const matrix& a, const matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
    matrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += aik * b(k, j);
      }
    return m;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using int_matrix = matrix<long long>;
using laurent_matrix = matrix<laurent_poly>;

inline laurent_matrix to_laurent(const int_matrix& m) {
  laurent_matrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = laurent_poly(bigint(m(i, j)));
  return r;
}

/*! \brief Diagonal matrix with monomial entries coeff_i * x^(exp_i). */
inline laurent_matrix diagonal_monomials(const std::vector<int>& coeffs, const std::vector<int>& exps) {
  laurent_matrix m(coeffs.size(), coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    m(i, i) = laurent_poly::monomial(coeffs[i], exps[i]);
  return m;
}

/*! \brief Exact determinant of a square Laurent matrix.
 *
 * Each row is first multiplied by a power of x clearing its negative
 * exponents; the shifted matrix is reduced by fraction-free (Bareiss)
 * elimination, whose divisions are exact in the polynomial ring, and the
 * accumulated power of x is divided back out at the end.
 */
inline laurent_poly determinant(const laurent_matrix& input) {
  if (input.rows() != input.cols()) throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = input.rows();
  if (n == 0) return laurent_poly(1);

  laurent_matrix m = input;
  int total_shift = 0;
  for (std::size_t i = 0; i < n; ++i) {
    int row_min = 0;
    bool all_zero = true;
    for (std::size_t j = 0; j < n; ++j)
      if (!m(i, j).is_zero()) {
        const int e = m(i, j).min_exponent();
        row_min = all_zero ? e : std::min(row_min, e);
        all_zero = false;
      }
    if (all_zero) return {};
    if (row_min < 0) {
      for (std::size_t j = 0; j < n; ++j) m(i, j) = m(i, j).shifted(-row_min);
      total_shift += -row_min;
    }
  }

  int sign = 1;
  laurent_poly prev_pivot(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t pivot = k + 1;
      while (pivot < n && m(pivot, k).is_zero()) ++pivot;
      if (pivot == n) return {};
      m.swap_rows(k, pivot);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = exact_quotient(m(k, k) * m(i, j) - m(i, k) * m(k, j), prev_pivot);
      m(i, k) = {};
    }
    prev_pivot = m(k, k);
  }

  laurent_poly det = m(n - 1, n - 1);
  if (sign < 0) det = -det;
  return det.shifted(-total_shift);
}

/*! \brief Exact integer determinant. */
inline bigint determinant(const int_matrix& m) {
  const laurent_poly det = determinant(to_laurent(m));
  if (det.is_zero()) return 0;
  if (det.min_exponent() != 0 || det.max_exponent() != 0)
    throw std::logic_error("integer determinant produced a non-constant polynomial");
  return det.coeff(0);
}

}  // namespace longknot
