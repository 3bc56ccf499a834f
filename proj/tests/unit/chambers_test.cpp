#include <gtest/gtest.h>

#include "entropic/chambers.hpp"
#include "entropic/matroid.hpp"
#include "entropic/simplex.hpp"
#include "matrices.hpp"

using namespace entropic;
using namespace entropic::support;

namespace {

std::vector<Scalar> vec(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

std::size_t count_bounded(const ExactMatrix& a, const std::vector<Scalar>& b) {
  return bounded_chambers(a, b).size();
}

}  // namespace

TEST(Simplex, FindsNonnegativePoint) {
  auto m = int_matrix({{1, 1, 1}, {1, -1, 0}});
  auto rhs = vec({4, 1});
  auto x = nonnegative_solution(m, rhs);
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(multiply(m, *x), rhs);
  for (const auto& v : *x) EXPECT_GE(v, 0);
}

TEST(Simplex, DetectsInfeasibility) {
  auto m = int_matrix({{1, 1}, {1, 1}});
  EXPECT_FALSE(nonnegative_solution(m, vec({1, 2})).has_value());
  EXPECT_FALSE(nonnegative_solution(int_matrix({{1, 2}}), vec({-1})).has_value());
}

TEST(Simplex, NegativeRhsRows) {
  auto m = int_matrix({{-1, 2, 0}, {0, 1, -3}});
  auto rhs = vec({-2, -5});
  auto x = nonnegative_solution(m, rhs);
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(multiply(m, *x), rhs);
}

TEST(Chambers, SliceParametrization) {
  auto a = example_three_by_five();
  auto b = vec({3, 2, 2});
  auto s = affine_slice(a, b);
  EXPECT_EQ(s.dimension(), 2u);
  RationalSampler rng(5);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(multiply(a, s.point(rng.vector(2))), b);
}

TEST(Chambers, ExampleThreeByFive) {
  EXPECT_EQ(count_bounded(example_three_by_five(), vec({3, 2, 2})), 4u);
}

TEST(Chambers, MinusK4) { EXPECT_EQ(count_bounded(minus_k4(), vec({2, 3, 5, 7})), 7u); }

// b = (3,3,3,3) lies in the span of the even 4-cycles; three lines meet at a point.
TEST(Chambers, MinusK4SymmetricRhsIsDegenerate) {
  try {
    enumerate_chambers(minus_k4(), vec({3, 3, 3, 3}));
    FAIL() << "expected DegenerateRHS";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegenerateRHS);
    EXPECT_NE(std::string(e.what()).find("share a vertex"), std::string::npos);
  }
}

TEST(Chambers, CorankOneSegments) {
  RationalSampler rng(11);
  for (std::size_t d = 2; d <= 5; ++d) {
    auto b = rng.vector(d);
    EXPECT_EQ(count_bounded(special_corank_one(d), b), d) << "d=" << d;
  }
}

TEST(Chambers, UniformMatroids) {
  RationalSampler rng(3);
  for (auto [d, n] : {std::pair<std::size_t, std::size_t>{2, 4}, {3, 5}, {3, 6}, {2, 5}}) {
    auto a = vandermonde(d, n);
    auto b = rng.vector(d);
    EXPECT_EQ(Integer(count_bounded(a, b)), mobius_invariant(Matroid(a))) << d << "x" << n;
  }
}

TEST(Chambers, WitnessRealizesSigns) {
  auto a = minus_k4();
  auto b = vec({2, 3, 5, 7});
  auto slice = affine_slice(a, b);
  for (const auto& c : enumerate_chambers(a, b)) {
    auto x = slice.point(c.witness);
    for (std::size_t i = 0; i < x.size(); ++i) EXPECT_EQ(sign(x[i]), c.signs[i]);
  }
}

TEST(Chambers, SortedBySignVector) {
  auto all = enumerate_chambers(example_three_by_five(), vec({3, 2, 2}));
  for (std::size_t i = 1; i < all.size(); ++i) EXPECT_LT(all[i - 1].signs, all[i].signs);
  EXPECT_GT(all.size(), 4u);
}

TEST(Chambers, CountMatchesMobiusOnRandomMatrices) {
  RationalSampler rng(21);
  for (int trial = 0; trial < 5; ++trial) {
    auto a = rng.matrix(2, 5);
    auto b = rng.vector(2);
    EXPECT_EQ(Integer(count_bounded(a, b)), mobius_invariant(Matroid(a)));
  }
}

TEST(Chambers, DegenerateRhsRejected) {
  try {
    enumerate_chambers(special_corank_one(3), vec({0, 1, 2}));
    FAIL() << "expected DegenerateRHS";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegenerateRHS);
  }
}
