#include "entropic/chambers.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "entropic/budget.hpp"
#include "entropic/errors.hpp"
#include "entropic/simplex.hpp"

namespace entropic {

std::vector<Scalar> AffineSlice::point(std::span<const Scalar> t) const {
  std::vector<Scalar> x = particular;
  for (std::size_t r = 0; r < kernel.rows(); ++r)
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += t[r] * kernel(r, i);
  return x;
}

AffineSlice affine_slice(const ExactMatrix& a, std::span<const Scalar> b) {
  if (b.size() != a.rows()) raise(ErrorKind::InvalidInput, "right-hand side length does not match the matrix");
  AffineSlice s;
  s.particular = solve(a, b);
  s.kernel = kernel_basis(a);
  return s;
}

namespace {

std::string format_subset(const std::vector<std::size_t>& s) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i] + 1;
  out << '}';
  return out.str();
}

// value of x_j along direction w (without the constant part)
Scalar directional(const ExactMatrix& k, std::size_t j, std::span<const Scalar> w) {
  Scalar acc;
  for (std::size_t r = 0; r < k.rows(); ++r) acc += w[r] * k(r, j);
  return acc;
}

}  // namespace

bool is_bounded(const AffineSlice& slice, std::span<const int> signs) {
  const std::size_t k = slice.dimension();
  const std::size_t n = slice.particular.size();
  if (k == 0) return true;
  // bounded iff some lambda >= 1 has sum_i lambda_i sigma_i c_i = 0
  ExactMatrix u(k, n);
  std::vector<Scalar> rhs(k);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t r = 0; r < k; ++r) {
      u(r, i) = signs[i] * slice.kernel(r, i);
      rhs[r] -= u(r, i);
    }
  }
  return nonnegative_solution(u, rhs).has_value();
}

std::vector<Chamber> enumerate_chambers(const ExactMatrix& a, std::span<const Scalar> b) {
  const AffineSlice slice = affine_slice(a, b);
  const std::size_t n = a.cols();
  const std::size_t k = slice.dimension();
  if (n > kMaxColumns) raise(ErrorKind::TooLarge, "too many columns for chamber enumeration");
  check_budget(binomial(static_cast<long>(n), static_cast<long>(k)).get_ui(), "vertex subsets");

  for (std::size_t i = 0; i < n; ++i) {
    bool constant = true;
    for (std::size_t r = 0; r < k; ++r) constant = constant && slice.kernel(r, i) == 0;
    if (constant && slice.particular[i] == 0)
      raise(ErrorKind::DegenerateRHS, "x_" + std::to_string(i + 1) + " vanishes on the whole slice");
  }

  std::map<std::vector<int>, std::vector<Scalar>> found;
  auto record = [&](std::vector<Scalar> t) {
    const auto x = slice.point(t);
    std::vector<int> s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = sign(x[i]);
    found.emplace(std::move(s), std::move(t));
  };

  if (k == 0) {
    for (std::size_t i = 0; i < n; ++i)
      if (slice.particular[i] == 0)
        raise(ErrorKind::DegenerateRHS, "the slice point lies on x_" + std::to_string(i + 1) + " = 0");
    record({});
  }

  std::vector<std::size_t> subset(k);
  for (std::size_t i = 0; i < k; ++i) subset[i] = i;
  while (k > 0) {
    ExactMatrix c(k, k);
    std::vector<Scalar> rhs(k);
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t s = 0; s < k; ++s) c(r, s) = slice.kernel(s, subset[r]);
      rhs[r] = -slice.particular[subset[r]];
    }
    if (determinant(c) != 0) {
      const ExactMatrix inv = inverse(c);
      const std::vector<Scalar> v = multiply(inv, rhs);
      const std::vector<Scalar> xv = slice.point(v);
      for (std::size_t j = 0; j < n; ++j) {
        if (xv[j] == 0 && !std::binary_search(subset.begin(), subset.end(), j)) {
          raise(ErrorKind::DegenerateRHS, "hyperplanes " + format_subset(subset) + " and x_" +
                                              std::to_string(j + 1) + " = 0 share a vertex");
        }
      }
      for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        std::vector<Scalar> target(k);
        for (std::size_t r = 0; r < k; ++r) target[r] = (mask >> r) & 1u ? -1 : 1;
        const std::vector<Scalar> w = multiply(inv, target);
        Scalar eps = 1;
        bool any = false;
        for (std::size_t j = 0; j < n; ++j) {
          if (xv[j] == 0) continue;
          const Scalar dj = directional(slice.kernel, j, w);
          if (sign(dj) == -sign(xv[j])) {
            Scalar ratio = abs(xv[j] / dj);
            if (!any || ratio < eps) eps = ratio;
            any = true;
          }
        }
        if (any) eps /= 2;
        std::vector<Scalar> t = v;
        for (std::size_t r = 0; r < k; ++r) t[r] += eps * w[r];
        record(std::move(t));
      }
    }
    // next k-subset in lexicographic order
    std::size_t i = k;
    while (i > 0 && subset[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++subset[i - 1];
    for (std::size_t j = i; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }

  std::vector<Chamber> out;
  out.reserve(found.size());
  for (auto& [signs, t] : found) {
    Chamber ch;
    ch.signs = signs;
    ch.witness = std::move(t);
    ch.bounded = is_bounded(slice, ch.signs);
    out.push_back(std::move(ch));
  }
  return out;
}

std::vector<Chamber> bounded_chambers(const ExactMatrix& a, std::span<const Scalar> b) {
  auto all = enumerate_chambers(a, b);
  std::erase_if(all, [](const Chamber& c) { return !c.bounded; });
  return all;
}

}  // namespace entropic
