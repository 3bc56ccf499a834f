#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "entropic/chambers.hpp"

namespace entropic {

struct NewtonSettings {
  int max_iterations = 200;
  // stop once the Newton decrement falls below this
  long double decrement_tolerance = 1e-12L;
  // required membership residual of (1/x_i) in rowspan(A)
  double residual_tolerance = 1e-9;
};

struct SolutionSet {
  std::vector<std::vector<double>> solutions;
  std::vector<std::vector<int>> signs;
  std::vector<double> residuals;       // |projection of 1/x onto ker A| / |1/x|
  std::vector<double> gradient_norms;  // |grad of sum log sigma_i x_i| at the end
  std::vector<double> slice_residuals; // |Ax - b|
  std::vector<int> iterations;
  double min_pairwise_gap = 0;  // infinity with fewer than two solutions
};

// Analytic centers of the bounded chambers, one Newton run per chamber.
// NewtonDivergence when a run does not converge.
SolutionSet analytic_centers(const ExactMatrix& a, std::span<const Scalar> b,
                             const NewtonSettings& settings = {});
SolutionSet analytic_centers(const AffineSlice& slice, std::span<const Chamber> chambers,
                             const NewtonSettings& settings = {});

bool solution_count_check(const ExactMatrix& a, std::span<const Scalar> b);

struct ProbeStep {
  std::vector<Scalar> b;
  double gap = 0;
};
struct ProbeResult {
  std::vector<ProbeStep> steps;
  // solver error at the first failing step, if any
  std::optional<std::string> failure;
};

// Solves along b_s = b_end + rho_s (b_start - b_end), rho_s = 10^(-decades s / steps),
// s = 0..steps, stopping at the first failure.
ProbeResult double_root_probe(const ExactMatrix& a, std::span<const Scalar> b_start,
                              std::span<const Scalar> b_end, int steps, int decades = 6);

struct HessianAtRoots {
  // prod x_k^2 * g_A(1/x) / |x|^(2(n-d)) at each center
  std::vector<double> values;
  bool all_positive = false;
};
// d = 2 or corank one only. OnDiscriminant when H_A(b) = 0.
HessianAtRoots hessian_sos_at_roots_check(const ExactMatrix& a, std::span<const Scalar> b);

}  // namespace entropic
