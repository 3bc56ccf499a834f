#pragma once

#include <span>
#include <utility>
#include <vector>

#include "entropic/linalg.hpp"
#include "entropic/polynomial.hpp"

namespace entropic {

enum class Regime { D2, CorankOne };

struct EntropicPoly {
  // Primitive-normalized polynomial in b_1..b_d.
  Polynomial poly;
  Regime regime = Regime::D2;
};

// The univariate polynomial b2 df/dz1 - b1 df/dz2 at z2 = 1, as a
// polynomial in (b1, b2, t) with t = z1.
Polynomial d2_critical_polynomial(const ExactMatrix& a);

// Requires a 2 x n matrix, n >= 3, with no parallel columns.
EntropicPoly disc_d2(const ExactMatrix& a);

// The printed squared-minor sums for n = 3 and n = 4 (UnsupportedN otherwise).
// p_ij are the 2x2 minors of (A | b).
Scalar plucker_sos_eval(const ExactMatrix& a, std::span<const Scalar> b);

// E = I + J of size d.
ExactMatrix all_ones_plus_identity(std::size_t d);
// det(t E + diag(b)) as a polynomial in (b_1..b_d, t).
Polynomial special_char_poly(std::size_t d);
// Discriminant in t of special_char_poly(d), primitive-normalized, in b_1..b_d.
// Cached per d; 2 <= d <= 6.
const Polynomial& special_corank_one_disc(std::size_t d);

struct CorankOneReduction {
  std::vector<Scalar> kernel;
  // H_A(b) = H_S(inverse_u b).
  ExactMatrix inverse_u;
};
// KernelZeroCoordinate or NotCorankOne when the reduction does not apply.
CorankOneReduction corank_one_reduction(const ExactMatrix& a);

EntropicPoly corank_one_disc(const ExactMatrix& a);

// Dispatches on the shape of A; InvalidInput when neither exact regime fits
// and BasicMatrix for basic input.
EntropicPoly entropic_discriminant(const ExactMatrix& a);
EntropicPoly entropic_discriminant(const ExactMatrix& a, Regime regime);

// (disc_t f'(t) for f = prod (t - a_i), H_S at b_i = a_n - a_i).
std::pair<Scalar, Scalar> derivative_disc_check(std::span<const Scalar> roots);

}  // namespace entropic
