#include <gtest/gtest.h>

#include "entropic/matroid.hpp"
#include "matrices.hpp"

using namespace entropic;
using namespace entropic::support;

namespace {

Polynomial T(const std::string& text) {
  std::vector<std::string> t{"t"};
  return parse_polynomial(text, t);
}

ColumnSet S(std::initializer_list<std::size_t> one_based) {
  ColumnSet s = 0;
  for (auto c : one_based) s |= ColumnSet{1} << (c - 1);
  return s;
}

}  // namespace

TEST(Matroid, IdentityIsBoolean) {
  Matroid m(identity_matrix(3));
  EXPECT_TRUE(m.circuits().empty());
  EXPECT_EQ(m.flat_count(), 8u);
  EXPECT_EQ(mobius_invariant(m), 1);
  EXPECT_TRUE(is_basic(m));
}

TEST(Matroid, RejectsZeroColumnAndRankDeficiency) {
  EXPECT_THROW(Matroid(int_matrix({{1, 0}, {0, 0}})), Error);
  EXPECT_THROW(Matroid(int_matrix({{1, 1}, {2, 2}})), Error);
}

TEST(Matroid, ExampleThreeByFive) {
  Matroid m(example_three_by_five());
  EXPECT_EQ(mobius_invariant(m), 4);
  EXPECT_FALSE(is_basic(m));
  bool found = false;
  for (const auto& c : m.circuits()) found |= c.support == S({1, 2, 4});
  EXPECT_TRUE(found);
  EXPECT_EQ(entropic_degree(m), 8);
  EXPECT_EQ(entropic_degree_crosscheck(m), 8);
}

TEST(Matroid, MinusK4) {
  Matroid m(minus_k4());
  EXPECT_EQ(m.char_poly(), T("t^4 - 6 t^3 + 15 t^2 - 17 t + 7"));
  EXPECT_EQ(mobius_invariant(m), 7);
  EXPECT_EQ(entropic_degree(m), 22);
  EXPECT_EQ(entropic_degree_crosscheck(m), 22);
  // Edge order 12,13,14,23,24,34; the 4-cycle 12-24-43-31.
  const Circuit* cyc = nullptr;
  for (const auto& c : m.circuits())
    if (c.support == S({1, 2, 5, 6})) cyc = &c;
  ASSERT_NE(cyc, nullptr);
  EXPECT_EQ(cyc->vector, (std::vector<Scalar>{1, -1, 0, 0, -1, 1}));
}

TEST(Matroid, OrientedK4) {
  Matroid m(oriented_k4());
  EXPECT_EQ(m.char_poly(), T("(t - 1)(t - 2)(t - 3)"));
  EXPECT_EQ(mobius_invariant(m), 6);
  EXPECT_EQ(entropic_degree(m), 14);
  EXPECT_EQ(entropic_degree_crosscheck(m), 14);
}

TEST(Matroid, UniformMobiusAndDegree) {
  for (auto [d, n] : std::vector<std::pair<long, long>>{{2, 4}, {3, 5}, {3, 6}, {2, 5}, {4, 6}}) {
    Matroid m(vandermonde(d, n));
    EXPECT_EQ(mobius_invariant(m), binomial(n - 1, d - 1)) << d << "x" << n;
    EXPECT_EQ(entropic_degree(m), generic_degree(d, n));
    EXPECT_EQ(entropic_degree_crosscheck(m), generic_degree(d, n));
  }
  Matroid u35(vandermonde(3, 5));
  EXPECT_EQ(u35.char_poly(), T("t^3 - 5 t^2 + 10 t - 6"));
}

TEST(Matroid, CharPolyVanishesAtOne) {
  for (const auto& a : {example_three_by_five(), minus_k4(), oriented_k4(), vandermonde(3, 6)}) {
    Matroid m(a);
    std::vector<Scalar> one{Scalar(1)};
    EXPECT_EQ(m.char_poly().evaluate(one), 0);
    const auto& chi = m.char_poly_coefficients();
    for (std::size_t k = 0; k < chi.size(); ++k) EXPECT_GE(sgn(chi[k]) * ((chi.size() - 1 - k) % 2 ? -1 : 1), 0);
  }
}

TEST(Matroid, GenericDegree) {
  EXPECT_EQ(generic_degree(3, 5), 16);
  EXPECT_EQ(generic_degree(2, 4), 4);
  for (long d = 2; d <= 6; ++d) EXPECT_EQ(generic_degree(d, d + 1), d * (d - 1));
}

TEST(Matroid, SpecialCorankOneDegrees) {
  for (std::size_t d = 2; d <= 6; ++d) {
    Matroid m(special_corank_one(d));
    const long expected = static_cast<long>(d * (d - 1));
    EXPECT_EQ(entropic_degree(m), expected);
    EXPECT_EQ(entropic_degree_crosscheck(m), expected);
  }
}

TEST(Matroid, DegreeBelowGenericUnlessUniform) {
  EXPECT_LT(entropic_degree(Matroid(example_three_by_five())), generic_degree(3, 5));
  EXPECT_LT(entropic_degree(Matroid(minus_k4())), generic_degree(4, 6));
  EXPECT_LT(entropic_degree(Matroid(oriented_k4())), generic_degree(3, 6));
}

TEST(Matroid, Contractions) {
  Matroid m(example_three_by_five());
  EXPECT_TRUE(is_basic(contraction(m, S({1})).matroid));
  for (std::size_t i = 2; i <= 5; ++i) EXPECT_FALSE(is_basic(contraction(m, S({i})).matroid)) << i;
  auto r = restriction(m, S({1, 2, 3}));
  EXPECT_EQ(mobius_invariant(r.matroid), 1);
}

TEST(Matroid, DeletionContractionOfMobius) {
  for (const auto& a : {example_three_by_five(), minus_k4(), oriented_k4(), vandermonde(2, 3)}) {
    Matroid m(a);
    for (std::size_t e = 0; e < m.size(); ++e) {
      if (is_isthmus(m, e)) continue;
      auto con = contraction(m, ColumnSet{1} << e);
      Integer con_mu = con.dropped.empty() ? mobius_invariant(con.matroid) : Integer(0);
      EXPECT_EQ(mobius_invariant(m), mobius_invariant(deletion(m, e).matroid) + con_mu);
      EXPECT_TRUE(delta_recurrence_check(m, e).holds) << e;
    }
  }
}

TEST(Matroid, IsthmusRejected) {
  Matroid m(int_matrix({{1, 0, 1}, {0, 1, 0}}));
  EXPECT_TRUE(is_isthmus(m, 1));
  EXPECT_THROW(delta_recurrence_check(m, 1), Error);
}

TEST(Matroid, RealLocusExample) {
  Matroid m(example_three_by_five());
  auto comps = real_locus_components(m);
  ASSERT_EQ(comps.size(), 4u);
  std::vector<ColumnSet> flats;
  for (const auto& c : comps) flats.push_back(c.flat);
  EXPECT_EQ(flats, (std::vector<ColumnSet>{S({2}), S({3}), S({4}), S({5})}));
}

TEST(Matroid, RealLocusCorankOne) {
  for (std::size_t d = 3; d <= 5; ++d) {
    Matroid m(special_corank_one(d));
    const long dd = static_cast<long>(d);
    EXPECT_EQ(Integer(static_cast<long>(real_locus_components(m).size())), binomial(dd, 2) + binomial(dd, 3));
  }
}

TEST(Matroid, RealLocusGenericIsColumns) {
  Matroid m(vandermonde(3, 6));
  EXPECT_EQ(real_locus_components(m).size(), 6u);
}
