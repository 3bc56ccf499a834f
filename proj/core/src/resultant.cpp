#include "entropic/resultant.hpp"

#include "entropic/errors.hpp"

namespace entropic {

PolyMatrix sylvester_matrix(const UnivariatePoly& p, const UnivariatePoly& q) {
  if (p.arity() != q.arity()) raise(ErrorKind::InvalidInput, "arity mismatch");
  const int m = p.degree();
  const int n = q.degree();
  const std::size_t size = static_cast<std::size_t>(m + n);
  PolyMatrix s(size, size, Polynomial(p.arity()));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s(r, r + k) = p.coefficients()[m - k];
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) s(n + r, r + k) = q.coefficients()[n - k];
  return s;
}

Polynomial resultant(const UnivariatePoly& p, const UnivariatePoly& q) {
  if (p.is_zero() || q.is_zero()) raise(ErrorKind::ZeroInput, "resultant with the zero polynomial");
  const auto s = sylvester_matrix(p, q);
  if (s.rows() == 0) return Polynomial::constant(p.arity(), 1);
  return determinant(s);
}

Polynomial discriminant(const UnivariatePoly& p) {
  const int m = p.degree();
  if (m < 1) raise(ErrorKind::InvalidInput, "discriminant needs degree at least 1");
  Polynomial res = resultant(p, p.derivative());
  Polynomial out = divide_exact(res, p.leading_coefficient());
  if ((m * (m - 1) / 2) % 2 == 1) out = -out;
  return out;
}

}  // namespace entropic
