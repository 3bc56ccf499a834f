#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "entropic/monomial.hpp"
#include "entropic/scalar.hpp"

namespace entropic {

// Sparse multivariate polynomial over the rationals in canonical form: terms
// sorted graded-lex descending, no zero coefficients, zero = no terms.
class Polynomial {
 public:
  struct Term {
    Monomial monomial;
    Scalar coefficient;
    friend bool operator==(const Term&, const Term&) = default;
  };

  Polynomial() = default;
  explicit Polynomial(std::size_t arity);

  static Polynomial constant(std::size_t arity, const Scalar& value);
  static Polynomial variable(std::size_t arity, std::size_t index);
  static Polynomial monomial(std::size_t arity, const Monomial& m, const Scalar& coefficient);
  // Combines duplicate monomials and drops zeros.
  static Polynomial from_terms(std::size_t arity, std::vector<Term> terms);

  std::size_t arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  // -1 for the zero polynomial.
  int total_degree() const;
  int degree_in(std::size_t var) const;
  bool is_homogeneous() const;

  // Requires a nonzero polynomial.
  const Term& leading_term() const;
  const Term& lex_leading_term() const;
  Scalar coefficient(const Monomial& m) const;
  Scalar constant_term() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Scalar& factor);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
  friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  Polynomial pow(unsigned exponent) const;
  Polynomial derivative(std::size_t var) const;

  Scalar evaluate(std::span<const Scalar> point) const;
  double evaluate(std::span<const double> point) const;

  // Replaces x_i by images[i]; all images must share one arity, which becomes
  // the arity of the result.
  Polynomial substitute(std::span<const Polynomial> images) const;
  // Moves variable i to index_map[i] inside a ring of new_arity variables.
  Polynomial remap(std::size_t new_arity, std::span<const std::size_t> index_map) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

 private:
  void canonicalize();
  void add_scaled(const Polynomial& other, int sign);

  std::size_t arity_ = 0;
  std::vector<Term> terms_;
};

// Exact quotient; raises DivisionNotExact when divisor does not divide
// dividend and ZeroInput for a zero divisor.
Polynomial divide_exact(const Polynomial& dividend, const Polynomial& divisor);
bool divides(const Polynomial& divisor, const Polynomial& dividend);

// Integer coefficients with gcd 1 and a positive graded-lex leading
// coefficient. Raises ZeroInput on the zero polynomial.
Polynomial primitive_normalize(const Polynomial& p);

// p == c * q for some nonzero rational c; returns c (p / q) when it exists.
bool proportional(const Polynomial& p, const Polynomial& q, Scalar* ratio = nullptr);

std::vector<std::string> default_variable_names(const std::string& stem, std::size_t count);
std::string to_string(const Polynomial& p, std::span<const std::string> names);
std::string to_string(const Polynomial& p);

// Reads expressions such as "7/4 b1^4 (b2 - b3)^2 + 2*b1*b2": integers,
// fractions, +, -, *, ^ with a non-negative integer exponent, division by a
// constant, parentheses, and implicit multiplication. Identifiers must appear
// in names; names[i] is variable i. InvalidInput on malformed text.
Polynomial parse_polynomial(std::string_view text, std::span<const std::string> names);

}  // namespace entropic
