#include "entropic/univariate.hpp"

#include "entropic/errors.hpp"

namespace entropic {

UnivariatePoly::UnivariatePoly(std::size_t arity, std::vector<Polynomial> coefficients)
    : arity_(arity), coeffs_(std::move(coefficients)) {
  for (const auto& c : coeffs_) {
    if (c.arity() != arity_) raise(ErrorKind::InvalidInput, "coefficient arity mismatch");
  }
  trim();
}

void UnivariatePoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UnivariatePoly UnivariatePoly::from_polynomial(const Polynomial& p, std::size_t var) {
  if (var >= p.arity()) raise(ErrorKind::InvalidInput, "variable index out of range");
  std::vector<std::vector<Polynomial::Term>> buckets;
  for (const auto& t : p.terms()) {
    const unsigned e = t.monomial[var];
    if (buckets.size() <= e) buckets.resize(e + 1);
    Monomial m = t.monomial;
    m.set(var, 0);
    buckets[e].push_back({m, t.coefficient});
  }
  std::vector<Polynomial> coeffs;
  coeffs.reserve(buckets.size());
  for (auto& b : buckets) coeffs.push_back(Polynomial::from_terms(p.arity(), std::move(b)));
  return UnivariatePoly(p.arity(), std::move(coeffs));
}

Polynomial UnivariatePoly::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Polynomial(arity_);
}

const Polynomial& UnivariatePoly::leading_coefficient() const {
  if (coeffs_.empty()) raise(ErrorKind::ZeroInput, "leading coefficient of the zero polynomial");
  return coeffs_.back();
}

UnivariatePoly UnivariatePoly::derivative() const {
  std::vector<Polynomial> out;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) out.push_back(coeffs_[k] * Scalar(static_cast<long>(k)));
  return UnivariatePoly(arity_, std::move(out));
}

Polynomial UnivariatePoly::evaluate(const Polynomial& t) const {
  Polynomial acc(arity_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Polynomial UnivariatePoly::to_polynomial(std::size_t var) const {
  return evaluate(Polynomial::variable(arity_, var));
}

UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b) {
  if (a.arity() != b.arity()) raise(ErrorKind::InvalidInput, "arity mismatch");
  if (a.is_zero() || b.is_zero()) return UnivariatePoly(a.arity());
  std::vector<Polynomial> out(a.degree() + b.degree() + 1, Polynomial(a.arity()));
  for (int i = 0; i <= a.degree(); ++i) {
    for (int j = 0; j <= b.degree(); ++j) out[i + j] += a.coefficients()[i] * b.coefficients()[j];
  }
  return UnivariatePoly(a.arity(), std::move(out));
}

}  // namespace entropic
