#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "entropic/linalg.hpp"
#include "entropic/scalar.hpp"

namespace entropic::support {

// Numerators in [-1000, 1000], denominators in [1, 100].
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}

  Scalar next() {
    std::uniform_int_distribution<long> num(-1000, 1000);
    std::uniform_int_distribution<long> den(1, 100);
    Scalar s(num(rng_), den(rng_));
    s.canonicalize();
    return s;
  }
  Scalar nonzero() {
    Scalar s;
    do s = next(); while (s == 0);
    return s;
  }
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  std::vector<Scalar> vector(std::size_t n) {
    std::vector<Scalar> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(next());
    return v;
  }
  ExactMatrix matrix(std::size_t rows, std::size_t cols) {
    ExactMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = next();
    return m;
  }
  ExactMatrix symmetric(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = next();
    return m;
  }
  // B^T B + I with a random rational B.
  ExactMatrix positive_definite(std::size_t n) {
    auto b = matrix(n, n);
    auto e = b.transpose() * b;
    for (std::size_t i = 0; i < n; ++i) e(i, i) += 1;
    return e;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline ExactMatrix int_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<Scalar>> out;
  for (const auto& r : rows) {
    std::vector<Scalar> row;
    for (long v : r) row.emplace_back(v);
    out.push_back(std::move(row));
  }
  return ExactMatrix::from_rows(out);
}

}  // namespace entropic::support
