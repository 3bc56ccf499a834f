#pragma once

#include <span>
#include <vector>

#include "entropic/matroid.hpp"

namespace entropic {

struct CircuitPolynomial {
  Circuit circuit;
  // h_v in x_1..x_n.
  Polynomial poly;
};

// sum over i in supp(v) of v_i times the product of the other x_j, j in supp(v).
Polynomial circuit_polynomial(const Circuit& c, std::size_t n);
std::vector<CircuitPolynomial> circuit_polys(const Matroid& m);

// True iff every non-flat J meets some chosen circuit in exactly one element
// outside J. TooLarge past the enumeration budget.
bool exposes(const Matroid& m, std::span<const Circuit> chosen);

// Circuits whose support contains the given column.
std::vector<Circuit> circuits_through(const Matroid& m, std::size_t column);

// f(z) = product of the column forms sum_i a_ij z_i, in z_1..z_d.
Polynomial arrangement_form(const ExactMatrix& a);

// sum over d-subsets I of det(A_I)^2 prod_{i in I} x_i^2, in x_1..x_n.
Polynomial g_A(const ExactMatrix& a);
// det(A diag(x)^2 A^T), the same polynomial computed directly.
Polynomial g_A_determinant(const ExactMatrix& a);
// g of a full-row-rank row selection of A_J; variables outside J do not
// appear. NotAFlat when J is not a flat.
Polynomial g_A_restricted(const Matroid& m, ColumnSet j);

// |J| - rk(A_J) + (|J^c| - number of parallel classes of A/J).
long tangent_codim(const Matroid& m, ColumnSet j);
// Nonempty flats J with M(A/J) non-basic, by rank then bitmask.
std::vector<Flat> singular_strata(const Matroid& m);

struct TangentConeGenerators {
  ColumnSet support = 0;
  // -sum_{i in C} v_i / p_i^2 x_i for the circuits C inside the support.
  std::vector<Polynomial> linear_forms;
  // Circuit polynomials of A/J written in the original x variables.
  std::vector<Polynomial> contraction_circuits;
};
// NotAFlat when supp(p) is not a flat, NotOnStratum when 1/p_J is not in the
// row space of A_J.
TangentConeGenerators tangent_cone_generators(const Matroid& m, std::span<const Scalar> p);

// (-1)^{d-1} (n-1) f^{d-2} sum_I det(A_I)^2 prod_{k not in I} l_k^2.
Polynomial hessian_product(const ExactMatrix& a);
// Determinant of the matrix of second partial derivatives of f.
Polynomial hessian_direct(const ExactMatrix& a);

// grad f(z). OnArrangement when some column form vanishes at z.
std::vector<Scalar> polar_map_eval(const ExactMatrix& a, std::span<const Scalar> z);
// A applied to the entrywise inverse of zA.
std::vector<Scalar> polar_map_composition(const ExactMatrix& a, std::span<const Scalar> z);
bool projectively_equal(std::span<const Scalar> u, std::span<const Scalar> v);

}  // namespace entropic
