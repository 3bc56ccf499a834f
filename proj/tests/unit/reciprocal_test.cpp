#include <gtest/gtest.h>

#include "entropic/reciprocal.hpp"
#include "matrices.hpp"

using namespace entropic;
using namespace entropic::support;

namespace {

ColumnSet S(std::initializer_list<std::size_t> one_based) {
  ColumnSet s = 0;
  for (auto c : one_based) s |= ColumnSet{1} << (c - 1);
  return s;
}

const std::vector<std::string> kEdges{"x12", "x13", "x14", "x23", "x24", "x34"};

}  // namespace

TEST(Reciprocal, MinusK4Cubics) {
  Matroid m(minus_k4());
  auto polys = circuit_polys(m);
  std::vector<Polynomial> printed{
      parse_polynomial("x12 x13 x24 - x12 x13 x34 - x12 x24 x34 + x13 x24 x34", kEdges),
      parse_polynomial("x13 x14 x23 - x13 x14 x24 - x13 x23 x24 + x14 x23 x24", kEdges),
      parse_polynomial("x12 x14 x23 - x12 x14 x34 - x12 x23 x34 + x14 x23 x34", kEdges)};
  ASSERT_EQ(polys.size(), 3u);
  for (const auto& target : printed) {
    int hits = 0;
    for (const auto& cp : polys) hits += cp.poly == target || cp.poly == -target;
    EXPECT_EQ(hits, 1) << to_string(target, kEdges);
  }
}

TEST(Reciprocal, SmallCircuitPolynomial) {
  Matroid m(int_matrix({{1, 0, 1}, {0, 1, 1}}));
  ASSERT_EQ(m.circuits().size(), 1u);
  std::vector<std::string> x{"x1", "x2", "x3"};
  // Kernel (1, 1, -1) with the first entry positive.
  EXPECT_EQ(circuit_polys(m)[0].poly, parse_polynomial("x2 x3 + x1 x3 - x1 x2", x));
}

TEST(Reciprocal, ParallelPairCircuit) {
  Matroid m(int_matrix({{1, 2, 0}, {0, 0, 1}}));
  std::vector<std::string> x{"x1", "x2", "x3"};
  ASSERT_EQ(m.circuits().size(), 1u);
  EXPECT_EQ(circuit_polys(m)[0].poly, parse_polynomial("2 x2 - x1", x));
}

TEST(Reciprocal, ExposureUniform) {
  for (auto [d, n] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 4}, {2, 5}, {3, 5}}) {
    Matroid m(vandermonde(d, n));
    auto chosen = circuits_through(m, n - 1);
    EXPECT_EQ(Integer(static_cast<long>(chosen.size())), binomial(static_cast<long>(n - 1), static_cast<long>(d)));
    EXPECT_TRUE(exposes(m, chosen));
    EXPECT_TRUE(exposes(m, m.circuits()));
    EXPECT_FALSE(exposes(m, std::span<const Circuit>{}));
  }
}

TEST(Reciprocal, RemovingUniqueExposerFails) {
  Matroid m(minus_k4());
  auto all = m.circuits();
  for (std::size_t drop = 0; drop < all.size(); ++drop) {
    std::vector<Circuit> rest;
    for (std::size_t i = 0; i < all.size(); ++i)
      if (i != drop) rest.push_back(all[i]);
    // Each 4-cycle alone exposes the set of its other three edges.
    EXPECT_FALSE(exposes(m, rest));
  }
}

TEST(Reciprocal, GASumMatchesDeterminant) {
  for (const auto& a : {example_three_by_five(), two_by_n(6), minus_k4(), oriented_k4(), vandermonde(3, 5)}) {
    EXPECT_EQ(g_A(a), g_A_determinant(a));
  }
  std::vector<std::string> x{"x1", "x2", "x3"};
  EXPECT_EQ(g_A(identity_matrix(3)), parse_polynomial("x1^2 x2^2 x3^2", x));
  std::vector<std::string> x2{"x1", "x2"};
  EXPECT_EQ(g_A(int_matrix({{1, 1}})), parse_polynomial("x1^2 + x2^2", x2));
}

TEST(Reciprocal, GAPositiveOffZero) {
  RationalSampler rng(31);
  auto g = g_A(example_three_by_five());
  for (int i = 0; i < 200; ++i) {
    auto x = rng.vector(5);
    bool any_zero = false;
    for (const auto& v : x) any_zero |= v == 0;
    if (!any_zero) EXPECT_GT(g.evaluate(x), 0);
  }
}

TEST(Reciprocal, GARestricted) {
  Matroid m(example_three_by_five());
  std::vector<std::string> x = default_variable_names("x", 5);
  EXPECT_EQ(g_A_restricted(m, S({2})), parse_polynomial("x2^2", x));
  auto g = g_A_restricted(m, S({1, 2, 4}));
  EXPECT_EQ(g.size(), 3u);
  EXPECT_THROW(g_A_restricted(m, S({1, 2})), Error);
}

TEST(Reciprocal, TangentCodim) {
  Matroid m(example_three_by_five());
  EXPECT_EQ(tangent_codim(m, m.ground()), 2);
  EXPECT_EQ(tangent_codim(m, S({1})), 2);
  for (std::size_t i = 2; i <= 5; ++i) EXPECT_LT(tangent_codim(m, S({i})), 2) << i;
  for (const auto& level : m.flats_by_rank())
    for (const auto& f : level) {
      const bool basic = is_basic(contraction(m, f.members).matroid);
      EXPECT_LE(tangent_codim(m, f.members), 2);
      EXPECT_EQ(tangent_codim(m, f.members) == 2, basic);
    }
}

TEST(Reciprocal, SingularStrata) {
  EXPECT_TRUE(singular_strata(Matroid(identity_matrix(3))).empty());
  auto strata = singular_strata(Matroid(example_three_by_five()));
  std::vector<ColumnSet> got;
  for (const auto& f : strata) got.push_back(f.members);
  EXPECT_EQ(got, (std::vector<ColumnSet>{S({2}), S({3}), S({4}), S({5})}));
  // Corank one: flats of size at most d - 2.
  auto special = singular_strata(Matroid(special_corank_one(4)));
  for (const auto& f : special) EXPECT_LE(cardinality(f.members), 2u);
  EXPECT_EQ(special.size(), 5u + 10u);
}

TEST(Reciprocal, TangentConeInterior) {
  Matroid m(example_three_by_five());
  // p = 1 / (zA) for z = (1, 2, 3): a point of the reciprocal plane with full support.
  std::vector<Scalar> p{Scalar(1), Scalar(1, 2), Scalar(1, 3), Scalar(1, 3), Scalar(1, 4)};
  auto gens = tangent_cone_generators(m, p);
  EXPECT_EQ(gens.linear_forms.size(), m.circuits().size());
  EXPECT_TRUE(gens.contraction_circuits.empty());
  std::vector<std::vector<Scalar>> rows;
  for (const auto& l : gens.linear_forms) {
    std::vector<Scalar> row;
    for (std::size_t i = 0; i < 5; ++i) row.push_back(l.coefficient(Monomial::variable(i)));
    rows.push_back(row);
  }
  // The forms cut out a d-dimensional tangent space.
  EXPECT_EQ(rank(ExactMatrix::from_rows(rows)), 2u);
}

TEST(Reciprocal, TangentConeCoordinatePoints) {
  Matroid m(example_three_by_five());
  std::vector<Scalar> e1{1, 0, 0, 0, 0};
  auto smooth = tangent_cone_generators(m, e1);
  for (const auto& h : smooth.contraction_circuits) EXPECT_EQ(h.total_degree(), 1);
  std::vector<Scalar> e2{0, 1, 0, 0, 0};
  auto singular = tangent_cone_generators(m, e2);
  bool nonlinear = false;
  for (const auto& h : singular.contraction_circuits) nonlinear |= h.total_degree() > 1;
  EXPECT_TRUE(nonlinear);
  std::vector<Scalar> off{1, 1, 0, 0, 0};
  EXPECT_THROW(tangent_cone_generators(m, off), Error);
}

TEST(Reciprocal, NotOnStratum) {
  Matroid m(example_three_by_five());
  std::vector<Scalar> p{1, 1, 1, 1, 1};
  EXPECT_THROW(tangent_cone_generators(m, p), Error);
}

TEST(Reciprocal, HessianFormulaMatchesDirect) {
  for (const auto& a : {int_matrix({{1, 0, 1}, {0, 1, 1}}), two_by_n(5), vandermonde(3, 4), example_three_by_five(),
                        identity_matrix(2), identity_matrix(3)}) {
    EXPECT_EQ(hessian_product(a), hessian_direct(a));
  }
}

TEST(Reciprocal, HessianOfCoordinateProduct) {
  for (std::size_t d = 2; d <= 4; ++d) {
    auto f = arrangement_form(identity_matrix(d));
    Scalar c = static_cast<long>(d - 1);
    if ((d - 1) % 2) c = -c;
    EXPECT_EQ(hessian_direct(identity_matrix(d)), f.pow(static_cast<unsigned>(d - 2)) * c);
  }
}

TEST(Reciprocal, PolarMap) {
  auto a = example_three_by_five();
  std::vector<Scalar> z{1, 2, 3};
  EXPECT_TRUE(projectively_equal(polar_map_eval(a, z), polar_map_composition(a, z)));
  std::vector<Scalar> diag{1, 1};
  EXPECT_EQ(polar_map_eval(identity_matrix(2), diag), (std::vector<Scalar>{1, 1}));
  std::vector<Scalar> bad{1, -1, 0};
  EXPECT_THROW(polar_map_eval(a, bad), Error);
  // Homogeneity of degree n - 1.
  std::vector<Scalar> scaled{3, 6, 9};
  auto g1 = polar_map_eval(a, z);
  auto g3 = polar_map_eval(a, scaled);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(g3[i], g1[i] * 81);
}
