#pragma once

#include <cstddef>
#include <vector>

#include "entropic/scalar.hpp"

namespace entropic {

// Dense polynomial in t, coefficient k multiplies t^k.
using TPoly = std::vector<Scalar>;

// d! [x^d] (1+x)(2e^x - 1)^((t-1)/2) for d = 0..d_max, expanded exactly as
// exp(((t-1)/2) log(1 + 2(e^x - 1))). InvalidInput past d_max = 8.
std::vector<TPoly> stanley_egf_charpolys(std::size_t d_max);

// Compares the series expansion with zaslavsky_charpoly_coefficients for 1 <= d <= d_max.
bool zaslavsky_egf_check(std::size_t d_max);

}  // namespace entropic
