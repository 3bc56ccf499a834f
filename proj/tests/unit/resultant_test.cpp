#include <gtest/gtest.h>

#include "entropic/resultant.hpp"
#include "sampling.hpp"

using namespace entropic;

namespace {

const std::vector<std::string> kVars{"b1", "b2", "t"};

Polynomial P(const std::string& text) { return parse_polynomial(text, kVars); }
UnivariatePoly U(const std::string& text) { return UnivariatePoly::from_polynomial(P(text), 2); }

}  // namespace

TEST(Resultant, LinearSignConvention) { EXPECT_EQ(resultant(U("t - b1"), U("t - b2")), P("b1 - b2")); }

TEST(Resultant, QuadraticAgainstLinear) { EXPECT_EQ(resultant(U("t^2 + b1"), U("t + b2")), P("b2^2 + b1")); }

TEST(Resultant, SelfResultantVanishes) {
  EXPECT_TRUE(resultant(U("t^3 - b1 t + b2"), U("t^3 - b1 t + b2")).is_zero());
}

TEST(Resultant, ZeroInputRejected) { EXPECT_THROW(resultant(U("t"), UnivariatePoly(3)), Error); }

TEST(Resultant, SwapSign) {
  support::RationalSampler rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const int m = static_cast<int>(rng.integer(1, 4));
    const int n = static_cast<int>(rng.integer(1, 4));
    std::vector<Polynomial> pc, qc;
    for (int i = 0; i <= m; ++i) pc.push_back(Polynomial::constant(3, rng.nonzero()) + P("b1") * rng.next());
    for (int i = 0; i <= n; ++i) qc.push_back(Polynomial::constant(3, rng.nonzero()) + P("b2") * rng.next());
    UnivariatePoly p(3, pc), q(3, qc);
    auto pq = resultant(p, q);
    auto qp = resultant(q, p);
    if ((p.degree() * q.degree()) % 2 == 0) EXPECT_EQ(pq, qp);
    else EXPECT_EQ(pq, -qp);
  }
}

TEST(Discriminant, Quadratic) { EXPECT_EQ(discriminant(U("t^2 + b1 t + b2")), P("b1^2 - 4 b2")); }

TEST(Discriminant, DepressedCubic) { EXPECT_EQ(discriminant(U("t^3 + b1 t + b2")), P("-4 b1^3 - 27 b2^2")); }

TEST(Discriminant, DoubleRoot) { EXPECT_TRUE(discriminant(U("(t - b1)^2")).is_zero()); }

TEST(Discriminant, RepeatedFactorVanishes) {
  support::RationalSampler rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    auto f = P("t") - Polynomial::constant(3, rng.next());
    auto g = P("t^2") + P("t") * rng.next() + Polynomial::constant(3, rng.next());
    EXPECT_TRUE(discriminant(UnivariatePoly::from_polynomial(f * f * g, 2)).is_zero());
  }
}

TEST(Discriminant, NonMonicLeadingCoefficientDivides) {
  // disc(a t^2 + b t + c) = b^2 - 4ac with a symbolic leading coefficient.
  EXPECT_EQ(discriminant(U("b1 t^2 + b2 t + 3")), P("b2^2 - 12 b1"));
}
