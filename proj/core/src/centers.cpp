#include "entropic/centers.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <future>
#include <limits>
#include <thread>

#include "entropic/discriminants.hpp"
#include "entropic/errors.hpp"
#include "entropic/matroid.hpp"

namespace entropic {

namespace {

using Real = long double;
using Mat = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

struct Center {
  Vec x;
  double residual = 0;
  double gradient = 0;
  int iterations = 0;
};

Mat to_real(const ExactMatrix& m) {
  Mat out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = to_long_double(m(i, j));
  return out;
}

Vec to_real(std::span<const Scalar> v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out(i) = to_long_double(v[i]);
  return out;
}

Real barrier(const Vec& x, const Vec& sigma) {
  Real acc = 0;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const Real s = sigma(i) * x(i);
    if (!(s > 0)) return -std::numeric_limits<Real>::infinity();
    acc += std::log(s);
  }
  return acc;
}

Center newton(const Mat& kernel, const Vec& x0, const Vec& sigma, Vec t, const NewtonSettings& cfg,
              std::size_t label) {
  const auto fail = [&](const std::string& why) {
    raise(ErrorKind::NewtonDivergence, "chamber " + std::to_string(label) + ": " + why);
  };
  Center c;
  if (kernel.rows() == 0) {
    c.x = x0;
    return c;
  }
  const Mat kkt = kernel * kernel.transpose();
  const Eigen::LLT<Mat> kkt_llt(kkt);

  for (int it = 0;; ++it) {
    const Vec x = x0 + kernel.transpose() * t;
    const Vec y = x.cwiseInverse();
    const Vec g = kernel * y;
    const Mat h = kernel * y.cwiseAbs2().asDiagonal() * kernel.transpose();
    const Eigen::LLT<Mat> llt(h);
    if (llt.info() != Eigen::Success) fail("Hessian lost definiteness");
    const Vec step = llt.solve(g);
    const Real dec2 = g.dot(step);
    if (!std::isfinite(static_cast<double>(dec2))) fail("non-finite iterate");
    if (std::sqrt(std::max<Real>(dec2, 0)) < cfg.decrement_tolerance) {
      c.x = x;
      c.iterations = it;
      c.gradient = static_cast<double>(g.norm());
      const Vec proj = kernel.transpose() * kkt_llt.solve(g);
      c.residual = static_cast<double>(proj.norm() / y.norm());
      return c;
    }
    if (it >= cfg.max_iterations) fail("no convergence after " + std::to_string(it) + " iterations");

    const Real f0 = barrier(x, sigma);
    Real alpha = 1;
    for (;;) {
      const Vec trial = t + alpha * step;
      const Real f1 = barrier(x0 + kernel.transpose() * trial, sigma);
      if (std::isfinite(static_cast<double>(f1)) && (dec2 < 1e-12L || f1 >= f0 + alpha * dec2 / 4)) {
        t = trial;
        break;
      }
      alpha /= 2;
      if (alpha < 1e-30L) fail("line search stalled");
    }
  }
}

SolutionSet assemble(const ExactMatrix& kernel_exact, std::span<const Scalar> particular,
                     std::span<const Chamber> chambers, const NewtonSettings& cfg) {
  const Mat kernel = to_real(kernel_exact);
  const std::size_t total = chambers.size();
  std::vector<Center> centers(total);
  std::vector<std::exception_ptr> errors(total);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < total; i = next++) {
      try {
        Vec sigma(chambers[i].signs.size());
        for (std::size_t j = 0; j < chambers[i].signs.size(); ++j) sigma(j) = chambers[i].signs[j];
        // iterate around the exact witness
        std::vector<Scalar> base(particular.begin(), particular.end());
        for (std::size_t r = 0; r < kernel_exact.rows(); ++r)
          for (std::size_t j = 0; j < base.size(); ++j) base[j] += chambers[i].witness[r] * kernel_exact(r, j);
        centers[i] = newton(kernel, to_real(base), sigma, Vec::Zero(kernel.rows()), cfg, i + 1);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(total, 1));
  std::vector<std::future<void>> tasks;
  for (std::size_t w = 0; w < workers; ++w) tasks.push_back(std::async(std::launch::async, worker));
  for (auto& task : tasks) task.get();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  SolutionSet out;
  for (std::size_t i = 0; i < total; ++i) {
    const Center& c = centers[i];
    std::vector<double> x(c.x.size());
    for (Eigen::Index j = 0; j < c.x.size(); ++j) x[j] = static_cast<double>(c.x(j));
    if (c.residual >= cfg.residual_tolerance)
      raise(ErrorKind::NewtonDivergence,
            "chamber " + std::to_string(i + 1) + ": membership residual too large");
    out.solutions.push_back(std::move(x));
    out.signs.push_back(chambers[i].signs);
    out.residuals.push_back(c.residual);
    out.gradient_norms.push_back(c.gradient);
    out.iterations.push_back(c.iterations);
  }
  out.min_pairwise_gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < total; ++i)
    for (std::size_t j = i + 1; j < total; ++j)
      out.min_pairwise_gap =
          std::min(out.min_pairwise_gap, static_cast<double>((centers[i].x - centers[j].x).norm()));
  return out;
}

}  // namespace

SolutionSet analytic_centers(const AffineSlice& slice, std::span<const Chamber> chambers,
                             const NewtonSettings& settings) {
  std::vector<Chamber> bounded;
  for (const auto& c : chambers)
    if (c.bounded) bounded.push_back(c);
  return assemble(slice.kernel, slice.particular, bounded, settings);
}

SolutionSet analytic_centers(const ExactMatrix& a, std::span<const Scalar> b,
                             const NewtonSettings& settings) {
  const AffineSlice slice = affine_slice(a, b);
  const auto chambers = bounded_chambers(a, b);
  SolutionSet out = assemble(slice.kernel, slice.particular, chambers, settings);
  const Mat ar = to_real(a);
  const Vec br = to_real(b);
  for (const auto& x : out.solutions) {
    Vec xr(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) xr(j) = x[j];
    out.slice_residuals.push_back(static_cast<double>((ar * xr - br).norm()));
  }
  return out;
}

bool solution_count_check(const ExactMatrix& a, std::span<const Scalar> b) {
  const Matroid m(a);
  return Integer(analytic_centers(a, b).solutions.size()) == mobius_invariant(m);
}

ProbeResult double_root_probe(const ExactMatrix& a, std::span<const Scalar> b_start,
                              std::span<const Scalar> b_end, int steps, int decades) {
  if (steps < 1) raise(ErrorKind::InvalidInput, "probe needs at least one step");
  if (b_start.size() != b_end.size()) raise(ErrorKind::InvalidInput, "probe endpoints differ in length");
  ProbeResult out;
  for (int s = 0; s <= steps; ++s) {
    const double rho = std::pow(10.0, -static_cast<double>(decades) * s / steps);
    const Scalar r(rho);
    std::vector<Scalar> b(b_end.begin(), b_end.end());
    for (std::size_t i = 0; i < b.size(); ++i) b[i] += r * (b_start[i] - b_end[i]);
    try {
      const auto set = analytic_centers(a, b);
      out.steps.push_back({std::move(b), set.min_pairwise_gap});
    } catch (const Error& e) {
      out.failure = "step " + std::to_string(s) + ": " + e.what();
      break;
    }
  }
  return out;
}

HessianAtRoots hessian_sos_at_roots_check(const ExactMatrix& a, std::span<const Scalar> b) {
  const EntropicPoly h = entropic_discriminant(a);
  if (h.poly.evaluate(b) == 0) raise(ErrorKind::OnDiscriminant, "H_A vanishes at b");
  const auto set = analytic_centers(a, b);
  const Mat ar = to_real(a);
  const Real codim = static_cast<Real>(a.cols() - a.rows());
  HessianAtRoots out;
  out.all_positive = !set.solutions.empty();
  for (const auto& x : set.solutions) {
    Vec xr(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) xr(j) = x[j];
    const Mat gram = ar * xr.cwiseInverse().cwiseAbs2().asDiagonal() * ar.transpose();
    Real value = gram.determinant();
    for (Eigen::Index j = 0; j < xr.size(); ++j) value *= xr(j) * xr(j);
    value /= std::pow(xr.squaredNorm(), codim);
    out.values.push_back(static_cast<double>(value));
    out.all_positive = out.all_positive && value > 0;
  }
  return out;
}

}  // namespace entropic
