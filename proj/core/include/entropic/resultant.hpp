#pragma once

#include "entropic/linalg.hpp"
#include "entropic/univariate.hpp"

namespace entropic {

// Rows 0..deg q - 1 carry p's coefficients (highest first), the remaining
// deg p rows carry q's. With this layout Res(t - a, t - b) = a - b.
PolyMatrix sylvester_matrix(const UnivariatePoly& p, const UnivariatePoly& q);

// det of the Sylvester matrix; ZeroInput if either argument is zero.
Polynomial resultant(const UnivariatePoly& p, const UnivariatePoly& q);

// (-1)^{m(m-1)/2} Res(p, p') / lc(p) for m = deg p >= 1.
Polynomial discriminant(const UnivariatePoly& p);

}  // namespace entropic
