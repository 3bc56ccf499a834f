#include <gtest/gtest.h>

#include "entropic/discriminants.hpp"
#include "entropic/symdisc.hpp"
#include "sampling.hpp"

using namespace entropic;
using namespace entropic::support;

TEST(Symdisc, GramTwoByTwo) {
  auto x = symbolic_symmetric(2);
  auto names = symbolic_symmetric_names(2);
  auto g = commutator_gram(x, identity_matrix(2));
  ASSERT_EQ(g.rows(), 1u);
  EXPECT_EQ(g(0, 0), parse_polynomial("8 x12^2 + 2 (x11 - x22)^2", names));
  EXPECT_EQ(symdisc(x, identity_matrix(2)), parse_polynomial("(x11 - x22)^2 + 4 x12^2", names));
  EXPECT_EQ(generalized_char_disc(x, identity_matrix(2)), symdisc(x, identity_matrix(2)));
}

TEST(Symdisc, DiagonalGram) {
  auto x = int_matrix({{1, 0, 0}, {0, 4, 0}, {0, 0, -2}});
  auto g = commutator_gram(x, identity_matrix(3));
  EXPECT_EQ(g, int_matrix({{18, 0, 0}, {0, 18, 0}, {0, 0, 72}}));
}

TEST(Symdisc, ScalarMatrixVanishes) {
  RationalSampler rng(71);
  auto e = rng.positive_definite(3);
  EXPECT_EQ(symdisc(identity_matrix(3), identity_matrix(3)), 0);
  ExactMatrix ce = e;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) ce(i, j) *= Scalar(5, 3);
  EXPECT_EQ(symdisc(ce, e), 0);
}

TEST(Symdisc, IdentityMetricMatchesCharpolyDisc) {
  RationalSampler rng(73);
  for (std::size_t m = 2; m <= 4; ++m) {
    for (int trial = 0; trial < 5; ++trial) {
      auto x = rng.symmetric(m);
      const Scalar s = symdisc(x, identity_matrix(m));
      EXPECT_EQ(s, generalized_char_disc(x, identity_matrix(m)));
      EXPECT_GE(s, 0);
    }
  }
}

TEST(Symdisc, GeneralizedIdentity) {
  RationalSampler rng(79);
  for (std::size_t m = 2; m <= 3; ++m) {
    for (int trial = 0; trial < 4; ++trial) {
      auto x = rng.symmetric(m);
      auto e = rng.positive_definite(m);
      const Scalar de = determinant(e);
      EXPECT_EQ(generalized_char_disc(x, e), power(de, static_cast<unsigned>(2 * m - 2)) * symdisc(x, e));
    }
  }
}

TEST(Symdisc, SymbolicThreeByThreeIdentity) {
  auto x = symbolic_symmetric(3);
  auto e = all_ones_plus_identity(3);
  const Scalar de = determinant(e);
  EXPECT_EQ(generalized_char_disc(x, e), symdisc(x, e) * power(de, 4));
}

TEST(Symdisc, RejectsIndefiniteMetric) {
  EXPECT_THROW(symdisc(identity_matrix(2), int_matrix({{1, 2}, {2, 1}})), Error);
}

TEST(Symdisc, SosCertificateSums) {
  RationalSampler rng(83);
  for (std::size_t m = 2; m <= 3; ++m) {
    auto x = rng.symmetric(m);
    for (const auto& e : {identity_matrix(m), rng.positive_definite(m)}) {
      auto cert = sos_certificate(x, e);
      const std::size_t big = m * (m + 1) / 2;
      const std::size_t small = m * (m - 1) / 2;
      EXPECT_EQ(Integer(static_cast<long>(cert.terms.size())), binomial(static_cast<long>(big), static_cast<long>(small)));
      Scalar total = 0;
      for (const auto& t : cert.terms) {
        EXPECT_GE(t, 0);
        total += t;
      }
      EXPECT_EQ(total, cert.gram_determinant);
      EXPECT_EQ(cert.gram_determinant, determinant(commutator_gram(x, e)));
    }
  }
}

TEST(Symdisc, SosCertificateDiagonal) {
  auto x = int_matrix({{1, 0}, {0, 3}});
  auto cert = sos_certificate(x, identity_matrix(2));
  int nonzero = 0;
  for (const auto& t : cert.terms) nonzero += t != 0;
  EXPECT_EQ(nonzero, 1);
  EXPECT_EQ(cert.gram_determinant, 8);
}

TEST(Symdisc, CorankOneConnection) {
  for (std::size_t d = 2; d <= 3; ++d) {
    PolyMatrix x(d, d, Polynomial(d));
    for (std::size_t i = 0; i < d; ++i) x(i, i) = -Polynomial::variable(d, i);
    auto s = symdisc(x, all_ones_plus_identity(d));
    EXPECT_TRUE(proportional(s, special_corank_one_disc(d)));
  }
}
