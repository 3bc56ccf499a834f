#include "entropic/linalg.hpp"

namespace entropic {

ExactMatrix identity_matrix(std::size_t n) {
  ExactMatrix m(n, n, Scalar(0));
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Scalar determinant(const ExactMatrix& m) { return bareiss_determinant(m, Scalar(1)); }

Polynomial determinant(const PolyMatrix& m) {
  const std::size_t arity = m.rows() == 0 ? 0 : m(0, 0).arity();
  return bareiss_determinant(m, Polynomial::constant(arity, 1));
}

PolyMatrix to_poly_matrix(const ExactMatrix& m, std::size_t arity) {
  PolyMatrix out(m.rows(), m.cols(), Polynomial(arity));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Polynomial::constant(arity, m(i, j));
  return out;
}

std::size_t rank(const ExactMatrix& input) {
  // Fraction-free forward elimination; skips columns without a pivot.
  ExactMatrix m = input;
  std::size_t r = 0;
  Scalar prev = 1;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        m(i, j) = (m(i, j) * m(r, c) - m(i, c) * m(r, j)) / prev;
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

EchelonForm rref(const ExactMatrix& input) {
  EchelonForm out{input, {}};
  ExactMatrix& m = out.reduced;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    const Scalar inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Scalar f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  return out;
}

ExactMatrix kernel_basis(const ExactMatrix& m) {
  const auto e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> rows;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(m.cols(), Scalar(0));
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
    rows.push_back(std::move(v));
  }
  if (rows.empty()) return ExactMatrix(0, m.cols());
  return ExactMatrix::from_rows(rows);
}

ExactMatrix left_kernel_basis(const ExactMatrix& m) { return kernel_basis(m.transpose()); }

bool is_consistent(const ExactMatrix& m, std::span<const Scalar> rhs) {
  if (rhs.size() != m.rows()) raise(ErrorKind::InvalidInput, "right-hand side has the wrong length");
  ExactMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = rhs[i];
  }
  const auto e = rref(aug);
  return e.pivots.empty() || e.pivots.back() != m.cols();
}

std::vector<Scalar> solve(const ExactMatrix& m, std::span<const Scalar> rhs) {
  if (rhs.size() != m.rows()) raise(ErrorKind::InvalidInput, "right-hand side has the wrong length");
  ExactMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = rhs[i];
  }
  const auto e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) raise(ErrorKind::InvalidInput, "inconsistent linear system");
  std::vector<Scalar> x(m.cols(), Scalar(0));
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.reduced(i, m.cols());
  return x;
}

ExactMatrix inverse(const ExactMatrix& m) {
  if (m.rows() != m.cols()) raise(ErrorKind::InvalidInput, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  ExactMatrix aug(n, 2 * n, Scalar(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const auto e = rref(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) raise(ErrorKind::RankDeficient, "matrix is singular");
  ExactMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

std::vector<std::size_t> independent_columns(const ExactMatrix& m) { return rref(m).pivots; }

std::vector<std::size_t> independent_rows(const ExactMatrix& m) { return rref(m.transpose()).pivots; }

std::vector<Scalar> multiply(const ExactMatrix& m, std::span<const Scalar> v) {
  if (v.size() != m.cols()) raise(ErrorKind::InvalidInput, "vector has the wrong length");
  std::vector<Scalar> out(m.rows(), Scalar(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

bool is_symmetric(const ExactMatrix& m) {
  if (m.rows() != m.cols()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != m(j, i)) return false;
  return true;
}

bool is_positive_definite(const ExactMatrix& m) {
  if (!is_symmetric(m)) return false;
  for (std::size_t k = 1; k <= m.rows(); ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    if (determinant(m.select_rows(idx).select_columns(idx)) <= 0) return false;
  }
  return true;
}

}  // namespace entropic
