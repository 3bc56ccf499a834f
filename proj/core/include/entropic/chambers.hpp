#pragma once

#include <span>
#include <vector>

#include "entropic/linalg.hpp"
#include "entropic/scalar.hpp"

namespace entropic {

// {Ax = b} parametrized as x(t) = particular + t^T kernel.
struct AffineSlice {
  std::vector<Scalar> particular;
  ExactMatrix kernel;

  std::size_t dimension() const { return kernel.rows(); }
  std::vector<Scalar> point(std::span<const Scalar> t) const;
};

AffineSlice affine_slice(const ExactMatrix& a, std::span<const Scalar> b);

struct Chamber {
  std::vector<int> signs;       // +1 / -1 per coordinate x_i
  std::vector<Scalar> witness;  // t with sign(x_i(t)) = signs[i]
  bool bounded = false;
};

// Every chamber of the coordinate arrangement restricted to {Ax = b} that has
// a vertex, ordered by sign vector. DegenerateRHS when more than dim(slice)
// hyperplanes meet at a vertex, TooLarge past the budget.
std::vector<Chamber> enumerate_chambers(const ExactMatrix& a, std::span<const Scalar> b);
std::vector<Chamber> bounded_chambers(const ExactMatrix& a, std::span<const Scalar> b);

// Exact recession-cone test for the chamber with the given signs.
bool is_bounded(const AffineSlice& slice, std::span<const int> signs);

}  // namespace entropic
