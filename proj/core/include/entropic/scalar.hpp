#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace entropic {

// Arbitrary-precision rational. mpq_class keeps numerator and denominator
// coprime with a positive denominator once canonicalized; every helper here
// returns canonical values.
using Scalar = mpq_class;
using Integer = mpz_class;

// Accepts "7", "-3", "p/q" (q != 0). Whitespace around the token is ignored.
Scalar parse_scalar(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Scalar& value);

inline int sign(const Scalar& value) { return sgn(value); }
inline bool is_integer(const Scalar& value) { return value.get_den() == 1; }
double to_double(const Scalar& value);
long double to_long_double(const Scalar& value);

Scalar power(const Scalar& base, unsigned exponent);
Integer binomial(long n, long k);
Integer factorial(unsigned n);

}  // namespace entropic
