#include "entropic/symdisc.hpp"

#include "entropic/errors.hpp"
#include "entropic/resultant.hpp"

namespace entropic {

namespace {

void validate(std::size_t m, const ExactMatrix& e, std::size_t limit) {
  if (m < 2) raise(ErrorKind::InvalidInput, "the symmetric discriminant needs m >= 2");
  if (m > limit) raise(ErrorKind::TooLarge, "matrix size " + std::to_string(m) + " exceeds the supported limit");
  if (e.rows() != m || e.cols() != m) raise(ErrorKind::InvalidInput, "E and X differ in size");
  if (!is_positive_definite(e)) raise(ErrorKind::NotPositiveDefinite, "E is not symmetric positive definite");
}

template <class T>
Matrix<T> lift(const ExactMatrix& a, const T& one) {
  Matrix<T> out(a.rows(), a.cols(), one - one);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = one * a(i, j);
  return out;
}

template <class T>
T trace_product(const Matrix<T>& p, const Matrix<T>& q) {
  // trace(P^T Q) for the already E-weighted factors.
  T acc = p(0, 0) * q(0, 0);
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < p.cols(); ++j)
      if (i != 0 || j != 0) acc += p(i, j) * q(i, j);
  return acc;
}

template <class T>
std::vector<Matrix<T>> commutator_images(const Matrix<T>& x, const ExactMatrix& e, const T& one) {
  const std::size_t m = x.rows();
  const Matrix<T> einv = lift(inverse(e), one);
  const Matrix<T> left = einv * x;   // E^{-1} X
  const Matrix<T> right = x * einv;  // X E^{-1}
  std::vector<Matrix<T>> out;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      // (E^{-1} X W)_{rc} with W = e_i e_j^T - e_j e_i^T picks columns i, j.
      Matrix<T> phi(m, m, one - one);
      for (std::size_t r = 0; r < m; ++r) {
        phi(r, j) += left(r, i);
        phi(r, i) -= left(r, j);
        phi(i, r) -= right(j, r);
        phi(j, r) += right(i, r);
      }
      out.push_back(std::move(phi));
    }
  }
  return out;
}

template <class T>
Matrix<T> gram(const Matrix<T>& x, const ExactMatrix& e, const T& one) {
  const auto images = commutator_images(x, e, one);
  const Matrix<T> el = lift(e, one);
  std::vector<Matrix<T>> weighted;
  // trace(P^T E Q E) = <P, E Q E> entrywise.
  for (const auto& q : images) weighted.push_back(el * q * el);
  const std::size_t n = images.size();
  Matrix<T> g(n, n, one - one);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      g(a, b) = trace_product(images[a], weighted[b]);
      g(b, a) = g(a, b);
    }
  return g;
}

Scalar normalizer(std::size_t m, const ExactMatrix& e) {
  const std::size_t pairs = m * (m - 1) / 2;
  Scalar c = power(Scalar(2), static_cast<unsigned>(pairs)) * power(determinant(e), static_cast<unsigned>(m - 1));
  return 1 / c;
}

}  // namespace

PolyMatrix symbolic_symmetric(std::size_t m) {
  const std::size_t arity = m * (m + 1) / 2;
  PolyMatrix x(m, m, Polynomial(arity));
  std::size_t v = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      x(i, j) = Polynomial::variable(arity, v++);
      x(j, i) = x(i, j);
    }
  return x;
}

std::vector<std::string> symbolic_symmetric_names(std::size_t m) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = i; j <= m; ++j) names.push_back("x" + std::to_string(i) + std::to_string(j));
  return names;
}

ExactMatrix commutator_gram(const ExactMatrix& x, const ExactMatrix& e) {
  validate(x.rows(), e, 6);
  if (!is_symmetric(x)) raise(ErrorKind::InvalidInput, "X is not symmetric");
  return gram(x, e, Scalar(1));
}

PolyMatrix commutator_gram(const PolyMatrix& x, const ExactMatrix& e) {
  validate(x.rows(), e, 3);
  const std::size_t arity = x(0, 0).arity();
  return gram(x, e, Polynomial::constant(arity, 1));
}

Scalar symdisc(const ExactMatrix& x, const ExactMatrix& e) {
  return determinant(commutator_gram(x, e)) * normalizer(x.rows(), e);
}

Polynomial symdisc(const PolyMatrix& x, const ExactMatrix& e) {
  return determinant(commutator_gram(x, e)) * normalizer(x.rows(), e);
}

Polynomial generalized_char_disc(const PolyMatrix& x, const ExactMatrix& e) {
  const std::size_t m = x.rows();
  if (e.rows() != m || e.cols() != m) raise(ErrorKind::InvalidInput, "E and X differ in size");
  const std::size_t arity = x(0, 0).arity() + 1;
  std::vector<std::size_t> map(arity - 1);
  for (std::size_t i = 0; i + 1 < arity; ++i) map[i] = i;
  const Polynomial t = Polynomial::variable(arity, arity - 1);
  PolyMatrix pencil(m, m, Polynomial(arity));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) pencil(i, j) = t * e(i, j) - x(i, j).remap(arity, map);
  const auto p = UnivariatePoly::from_polynomial(determinant(pencil), arity - 1);
  const Polynomial disc = discriminant(p);
  std::vector<std::size_t> back(arity);
  for (std::size_t i = 0; i + 1 < arity; ++i) back[i] = i;
  back[arity - 1] = 0;
  return disc.remap(arity - 1, back);
}

Scalar generalized_char_disc(const ExactMatrix& x, const ExactMatrix& e) {
  return generalized_char_disc(to_poly_matrix(x, 0), e).constant_term();
}

SosCertificate sos_certificate(const ExactMatrix& x, const ExactMatrix& e) {
  validate(x.rows(), e, 6);
  if (!is_symmetric(x)) raise(ErrorKind::InvalidInput, "X is not symmetric");
  const std::size_t m = x.rows();
  // Symmetric basis S_ij = e_i e_j^T + e_j e_i^T (i < j) and S_ii = e_i e_i^T.
  std::vector<std::pair<std::size_t, std::size_t>> basis;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) basis.emplace_back(i, j);
  const std::size_t big = basis.size();
  auto basis_matrix = [&](std::size_t k) {
    ExactMatrix s(m, m, Scalar(0));
    s(basis[k].first, basis[k].second) = 1;
    s(basis[k].second, basis[k].first) = 1;
    return s;
  };
  const auto images = commutator_images(x, e, Scalar(1));
  const std::size_t small = images.size();
  // Coordinates of each (symmetric) image in the S basis.
  ExactMatrix r(big, small, Scalar(0));
  for (std::size_t c = 0; c < small; ++c)
    for (std::size_t k = 0; k < big; ++k) r(k, c) = images[c](basis[k].first, basis[k].second);
  ExactMatrix k(big, big);
  for (std::size_t a = 0; a < big; ++a)
    for (std::size_t b = 0; b < big; ++b) {
      const ExactMatrix weighted = e * basis_matrix(b) * e;
      k(a, b) = trace_product(basis_matrix(a), weighted);
    }
  // K = L D L^T with L unit lower triangular.
  ExactMatrix l = identity_matrix(big);
  std::vector<Scalar> dvec(big);
  for (std::size_t j = 0; j < big; ++j) {
    Scalar dj = k(j, j);
    for (std::size_t p = 0; p < j; ++p) dj -= l(j, p) * l(j, p) * dvec[p];
    if (dj <= 0) raise(ErrorKind::NotPositiveDefinite, "inner product Gram matrix is not positive definite");
    dvec[j] = dj;
    for (std::size_t i = j + 1; i < big; ++i) {
      Scalar v = k(i, j);
      for (std::size_t p = 0; p < j; ++p) v -= l(i, p) * l(j, p) * dvec[p];
      l(i, j) = v / dj;
    }
  }
  const ExactMatrix q = l.transpose() * r;
  SosCertificate out;
  // Binet-Cauchy over row subsets of size small.
  std::vector<std::size_t> pick(small);
  for (std::size_t i = 0; i < small; ++i) pick[i] = i;
  for (;;) {
    const Scalar det = determinant(q.select_rows(pick));
    Scalar term = det * det;
    for (auto i : pick) term *= dvec[i];
    out.terms.push_back(term);
    std::size_t i = small;
    while (i > 0 && pick[i - 1] == big - small + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < small; ++j) pick[j] = pick[j - 1] + 1;
  }
  out.gram_determinant = determinant(gram(x, e, Scalar(1)));
  return out;
}

}  // namespace entropic
