#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "entropic/errors.hpp"
#include "entropic/polynomial.hpp"
#include "entropic/scalar.hpp"

namespace entropic {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) raise(ErrorKind::InvalidInput, "ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }
  std::vector<T> column(std::size_t j) const {
    std::vector<T> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
  Matrix select_columns(std::span<const std::size_t> idx) const {
    Matrix out(rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < idx.size(); ++j) out(i, j) = (*this)(i, idx[j]);
    return out;
  }
  Matrix select_rows(std::span<const std::size_t> idx) const {
    Matrix out(idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(idx[i], j);
    return out;
  }
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using ExactMatrix = Matrix<Scalar>;
using PolyMatrix = Matrix<Polynomial>;

namespace detail {
inline bool is_zero(const Scalar& s) { return s == 0; }
inline bool is_zero(const Polynomial& p) { return p.is_zero(); }
inline Scalar exact_quotient(const Scalar& a, const Scalar& b) { return a / b; }
inline Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) { return divide_exact(a, b); }
}  // namespace detail

// Fraction-free (Bareiss) determinant with row pivoting. Every intermediate
// quotient is exact, so this works over any integral domain given a unit.
template <class T>
T bareiss_determinant(Matrix<T> m, const T& one) {
  if (m.rows() != m.cols()) raise(ErrorKind::InvalidInput, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return one;
  bool negate = false;
  T prev = one;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && detail::is_zero(m(p, k))) ++p;
    if (p == n) return one - one;
    if (p != k) {
      m.swap_rows(p, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T value = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = detail::exact_quotient(value, prev);
      }
      m(i, k) = one - one;
    }
    prev = m(k, k);
  }
  T det = m(n - 1, n - 1);
  if (negate) det = (one - one) - det;
  return det;
}

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) raise(ErrorKind::InvalidInput, "matrix product dimension mismatch");
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      T acc = a(i, 0) * b(0, j);
      for (std::size_t k = 1; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
      out(i, j) = acc;
    }
  }
  return out;
}

ExactMatrix identity_matrix(std::size_t n);
Scalar determinant(const ExactMatrix& m);
Polynomial determinant(const PolyMatrix& m);
PolyMatrix to_poly_matrix(const ExactMatrix& m, std::size_t arity);

std::size_t rank(const ExactMatrix& m);

struct EchelonForm {
  ExactMatrix reduced;
  std::vector<std::size_t> pivots;
};
// Reduced row echelon form: pivot entries 1, zero rows at the bottom.
EchelonForm rref(const ExactMatrix& m);

// Rows span the right kernel. One row per free column f of the reduced form:
// 1 at f, -reduced(i, f) at the pivot column of row i, 0 elsewhere.
ExactMatrix kernel_basis(const ExactMatrix& m);
ExactMatrix left_kernel_basis(const ExactMatrix& m);

// Some x with m x = rhs (free variables set to zero); InvalidInput when the
// system is inconsistent.
std::vector<Scalar> solve(const ExactMatrix& m, std::span<const Scalar> rhs);
bool is_consistent(const ExactMatrix& m, std::span<const Scalar> rhs);
// RankDeficient when m is singular.
ExactMatrix inverse(const ExactMatrix& m);

// Greedy choice of rows (first to last) forming a basis of the row space.
std::vector<std::size_t> independent_rows(const ExactMatrix& m);
std::vector<std::size_t> independent_columns(const ExactMatrix& m);

std::vector<Scalar> multiply(const ExactMatrix& m, std::span<const Scalar> v);
bool is_symmetric(const ExactMatrix& m);
// Exact test through the leading principal minors.
bool is_positive_definite(const ExactMatrix& m);

}  // namespace entropic
