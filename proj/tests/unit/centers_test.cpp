#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <cmath>

#include "entropic/centers.hpp"
#include "entropic/matroid.hpp"
#include "matrices.hpp"

using namespace entropic;
using namespace entropic::support;

namespace {

std::vector<Scalar> vec(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

// det(t E + diag(b)) with E = I + J, evaluated numerically.
double special_char(const std::vector<double>& b, double t) {
  const auto d = static_cast<Eigen::Index>(b.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Constant(d, d, t);
  for (Eigen::Index i = 0; i < d; ++i) m(i, i) = 2 * t + b[i];
  return m.determinant();
}

std::vector<double> real_roots(const std::vector<double>& b) {
  std::vector<double> roots;
  const double lo = -50, hi = 50, step = 1e-3;
  for (double t = lo; t < hi; t += step) {
    double a = t, c = t + step;
    double fa = special_char(b, a), fc = special_char(b, c);
    if (fa == 0) {
      roots.push_back(a);
      continue;
    }
    if ((fa < 0) == (fc < 0)) continue;
    for (int i = 0; i < 200; ++i) {
      double mid = (a + c) / 2, fm = special_char(b, mid);
      if ((fm < 0) == (fa < 0)) {
        a = mid;
        fa = fm;
      } else {
        c = mid;
      }
    }
    roots.push_back((a + c) / 2);
  }
  return roots;
}

}  // namespace

TEST(Centers, ExampleThreeByFiveRetinaEquations) {
  auto a = example_three_by_five();
  for (auto b : {vec({3, 2, 2}), vec({5, 1, 3}), vec({-2, 7, 1})}) {
    auto set = analytic_centers(a, b);
    ASSERT_EQ(set.solutions.size(), 4u);
    for (const auto& x : set.solutions) {
      const double z1 = 1 / x[0], z2 = 1 / x[1], z3 = 1 / x[2];
      EXPECT_NEAR(1 / z1 + 1 / (z1 + z2) + 1 / (z1 + z3), to_double(b[0]), 1e-9);
      EXPECT_NEAR(1 / z2 + 1 / (z1 + z2), to_double(b[1]), 1e-9);
      EXPECT_NEAR(1 / z3 + 1 / (z1 + z3), to_double(b[2]), 1e-9);
      EXPECT_NEAR(1 / x[3], z1 + z2, 1e-9);
      EXPECT_NEAR(1 / x[4], z1 + z3, 1e-9);
    }
  }
}

TEST(Centers, MinusK4SevenRealDistinct) {
  auto set = analytic_centers(minus_k4(), vec({2, 3, 5, 7}));
  EXPECT_EQ(set.solutions.size(), 7u);
  EXPECT_GT(set.min_pairwise_gap, 1e-6);
  for (double r : set.residuals) EXPECT_LT(r, 1e-9);
  for (double r : set.slice_residuals) EXPECT_LT(r, 1e-10);
}

TEST(Centers, CorankOneMatchesCharacteristicRoots) {
  auto a = special_corank_one(3);
  auto set = analytic_centers(a, vec({1, 2, 3}));
  auto roots = real_roots({1, 2, 3});
  ASSERT_EQ(roots.size(), 3u);
  ASSERT_EQ(set.solutions.size(), 3u);
  std::vector<double> tails;
  for (const auto& x : set.solutions) {
    tails.push_back(x[3]);
    for (int i = 0; i < 3; ++i) EXPECT_NEAR(x[i], i + 1 + x[3], 1e-10);
  }
  std::sort(tails.begin(), tails.end());
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(tails[i], roots[i], 1e-8);
}

TEST(Centers, CountEqualsMobius) {
  EXPECT_TRUE(solution_count_check(example_three_by_five(), vec({3, 2, 2})));
  EXPECT_TRUE(solution_count_check(minus_k4(), vec({2, 3, 5, 7})));
  EXPECT_TRUE(solution_count_check(vandermonde(2, 4), vec({3, -2})));
  RationalSampler rng(8);
  for (std::size_t d = 2; d <= 5; ++d) EXPECT_TRUE(solution_count_check(special_corank_one(d), rng.vector(d)));
}

TEST(Centers, ScalingProperty) {
  auto a = minus_k4();
  auto b = vec({2, 3, 5, 7});
  for (long lambda : {2L, 7L}) {
    std::vector<Scalar> lb;
    for (const auto& v : b) lb.push_back(v * lambda);
    auto base = analytic_centers(a, b);
    auto scaled = analytic_centers(a, lb);
    ASSERT_EQ(base.solutions.size(), scaled.solutions.size());
    for (std::size_t i = 0; i < base.solutions.size(); ++i) {
      EXPECT_EQ(base.signs[i], scaled.signs[i]);
      for (std::size_t j = 0; j < base.solutions[i].size(); ++j)
        EXPECT_NEAR(scaled.solutions[i][j], lambda * base.solutions[i][j], 1e-9 * lambda);
    }
  }
}

TEST(Centers, ResidualsOnRandomFixtures) {
  RationalSampler rng(13);
  for (int trial = 0; trial < 4; ++trial) {
    auto a = rng.matrix(3, 6);
    auto b = rng.vector(3);
    auto set = analytic_centers(a, b);
    EXPECT_EQ(Integer(set.solutions.size()), mobius_invariant(Matroid(a)));
    for (double r : set.residuals) EXPECT_LT(r, 1e-9);
  }
}

TEST(Centers, ProbeApproachingRealLocus) {
  auto a = example_three_by_five();
  auto probe = double_root_probe(a, vec({3, 2, 2}), vec({0, 1, 0}), 24);
  ASSERT_FALSE(probe.steps.empty());
  EXPECT_LT(probe.steps.back().gap, 1e-4);
  EXPECT_LT(probe.steps.back().gap, probe.steps.front().gap);
}

// Near a collapsing chamber one center runs into the arrangement.
TEST(Centers, MinusK4CenterEscapesNearSymmetricRhs) {
  auto a = minus_k4();
  double previous = 1;
  for (long e : {100L, 10000L, 1000000L}) {
    Scalar r(1, e);
    std::vector<Scalar> b{3 + r, 3 + 2 * r, 3 + 4 * r, 3 + 8 * r};
    auto set = analytic_centers(a, b);
    ASSERT_EQ(set.solutions.size(), 7u);
    double smallest = 1;
    for (const auto& x : set.solutions)
      for (double v : x) smallest = std::min(smallest, std::fabs(v));
    EXPECT_LT(smallest, previous / 10);
    previous = smallest;
  }
}

TEST(Centers, ProbeControlSegment) {
  auto a = example_three_by_five();
  auto probe = double_root_probe(a, vec({3, 2, 2}), vec({5, 3, 4}), 24);
  EXPECT_FALSE(probe.failure.has_value());
  for (const auto& s : probe.steps) EXPECT_GT(s.gap, 1e-2);
}

TEST(Centers, ProbeCorankOneCollision) {
  auto probe = double_root_probe(special_corank_one(3), vec({1, 2, 3}), vec({0, 0, 1}), 24);
  ASSERT_FALSE(probe.steps.empty());
  EXPECT_LT(probe.steps.back().gap, 1e-4);
}

TEST(Centers, HessianValuesPositive) {
  auto h = hessian_sos_at_roots_check(two_by_n(1), vec({2, 3}));
  EXPECT_EQ(h.values.size(), 3u);
  EXPECT_TRUE(h.all_positive);
  auto c = hessian_sos_at_roots_check(special_corank_one(3), vec({1, 2, 3}));
  EXPECT_EQ(c.values.size(), 3u);
  EXPECT_TRUE(c.all_positive);
}

TEST(Centers, HessianRejectsDiscriminantPoint) {
  try {
    hessian_sos_at_roots_check(special_corank_one(3), vec({0, 0, 1}));
    FAIL() << "expected OnDiscriminant";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OnDiscriminant);
  }
}
