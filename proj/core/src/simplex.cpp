#include "entropic/simplex.hpp"

#include "entropic/errors.hpp"

namespace entropic {

std::optional<std::vector<Scalar>> nonnegative_solution(const ExactMatrix& m,
                                                        std::span<const Scalar> rhs) {
  const std::size_t rows = m.rows();
  const std::size_t n = m.cols();
  if (rhs.size() != rows) raise(ErrorKind::InvalidInput, "simplex: rhs length mismatch");

  // columns: n structural, rows artificial, then the right-hand side
  const std::size_t width = n + rows + 1;
  ExactMatrix t(rows, width);
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    const bool flip = rhs[i] < 0;
    for (std::size_t j = 0; j < n; ++j) t(i, j) = flip ? Scalar(-m(i, j)) : m(i, j);
    t(i, n + i) = 1;
    t(i, width - 1) = flip ? Scalar(-rhs[i]) : rhs[i];
    basis[i] = n + i;
  }

  auto reduced_cost = [&](std::size_t j) {
    Scalar r = j >= n && j < n + rows ? Scalar(1) : Scalar(0);
    for (std::size_t i = 0; i < rows; ++i)
      if (basis[i] >= n) r -= t(i, j);
    return r;
  };

  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j) {
      if (reduced_cost(j) < 0) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;

    std::size_t leave = rows;
    Scalar best;
    for (std::size_t i = 0; i < rows; ++i) {
      if (t(i, enter) <= 0) continue;
      Scalar ratio = t(i, width - 1) / t(i, enter);
      if (leave == rows || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == rows) break;  // unbounded phase-one direction cannot occur; objective >= 0

    const Scalar pivot = t(leave, enter);
    for (std::size_t j = 0; j < width; ++j) t(leave, j) /= pivot;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == leave || t(i, enter) == 0) continue;
      const Scalar f = t(i, enter);
      for (std::size_t j = 0; j < width; ++j) t(i, j) -= f * t(leave, j);
    }
    basis[leave] = enter;
  }

  std::vector<Scalar> x(n);
  for (std::size_t i = 0; i < rows; ++i) {
    if (basis[i] >= n) {
      if (t(i, width - 1) != 0) return std::nullopt;
    } else {
      x[basis[i]] = t(i, width - 1);
    }
  }
  return x;
}

}  // namespace entropic
