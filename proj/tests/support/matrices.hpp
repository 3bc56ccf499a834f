#pragma once

#include "entropic/linalg.hpp"
#include "sampling.hpp"

namespace entropic::support {

inline ExactMatrix example_three_by_five() { return int_matrix({{1, 0, 0, 1, 1}, {0, 1, 0, 1, 0}, {0, 0, 1, 0, 1}}); }

inline ExactMatrix minus_k4() {
  return int_matrix({{1, 1, 1, 0, 0, 0}, {1, 0, 0, 1, 1, 0}, {0, 1, 0, 1, 0, 1}, {0, 0, 1, 0, 1, 1}});
}

inline ExactMatrix oriented_k4() {
  return int_matrix({{1, 1, 1, 0, 0, 0}, {-1, 0, 0, 1, 1, 0}, {0, -1, 0, -1, 0, 1}});
}

// Columns (1, t, ..., t^{d-1}) for t = 1..n: uniform matroid U_{d,n}.
inline ExactMatrix vandermonde(std::size_t d, std::size_t n) {
  ExactMatrix m(d, n);
  for (std::size_t j = 0; j < n; ++j) {
    Scalar v = 1;
    for (std::size_t i = 0; i < d; ++i) {
      m(i, j) = v;
      v *= static_cast<long>(j + 1);
    }
  }
  return m;
}

// [I_d | -1].
inline ExactMatrix special_corank_one(std::size_t d) {
  ExactMatrix m(d, d + 1, Scalar(0));
  for (std::size_t i = 0; i < d; ++i) {
    m(i, i) = 1;
    m(i, d) = -1;
  }
  return m;
}

inline ExactMatrix two_by_n(long a) { return int_matrix({{1, 1, 1, 1}, {0, 2, 3, a}}); }

}  // namespace entropic::support
