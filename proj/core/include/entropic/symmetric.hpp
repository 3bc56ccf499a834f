#pragma once

#include <cstddef>

#include "entropic/polynomial.hpp"

namespace entropic {

// e_k in x_1..x_arity; e_0 = 1.
Polynomial elementary_symmetric(std::size_t arity, std::size_t k);

bool is_symmetric(const Polynomial& p);

// Expresses a symmetric p as a polynomial in e_1..e_d (variable i-1 of the
// result stands for e_i). Raises NotSymmetric otherwise.
Polynomial to_elementary(const Polynomial& p);

// Substitutes e_i -> elementary_symmetric(arity, i).
Polynomial from_elementary(const Polynomial& q, std::size_t arity);

}  // namespace entropic
