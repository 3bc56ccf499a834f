#pragma once

#include <cstddef>
#include <vector>

#include "entropic/polynomial.hpp"

namespace entropic {

// Polynomial in a distinguished variable t whose coefficients live in
// Q[x_1..x_arity]. coefficient(k) multiplies t^k.
class UnivariatePoly {
 public:
  UnivariatePoly() = default;
  explicit UnivariatePoly(std::size_t arity) : arity_(arity) {}
  // Trailing zero coefficients are trimmed.
  UnivariatePoly(std::size_t arity, std::vector<Polynomial> coefficients);

  // Splits p by powers of variable var; the coefficients keep p's arity and
  // no longer involve var.
  static UnivariatePoly from_polynomial(const Polynomial& p, std::size_t var);

  std::size_t arity() const { return arity_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Polynomial>& coefficients() const { return coeffs_; }
  Polynomial coefficient(std::size_t k) const;
  const Polynomial& leading_coefficient() const;

  UnivariatePoly derivative() const;
  Polynomial evaluate(const Polynomial& t) const;
  // Reassembles a polynomial with t placed at variable var.
  Polynomial to_polynomial(std::size_t var) const;

  friend bool operator==(const UnivariatePoly&, const UnivariatePoly&) = default;

 private:
  void trim();

  std::size_t arity_ = 0;
  std::vector<Polynomial> coeffs_;
};

UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b);

}  // namespace entropic
