#include <gtest/gtest.h>

#include "freediv/error.hpp"
#include "oracle.hpp"

using namespace freediv;
using oracle::P;

namespace {

RingPtr X2() { return PolyRing::make({"x1", "x2"}); }
RingPtr X3() { return PolyRing::make({"x1", "x2", "x3"}); }

TEST(Differentiate, PowerRule) {
  auto R = X2();
  EXPECT_EQ(differentiate(P(R, "x1^3 + x2^2"), 0), P(R, "3*x1^2"));
}

TEST(Differentiate, ConstantIsZero) { EXPECT_TRUE(differentiate(P(X2(), "7/3"), 0).isZero()); }

TEST(Differentiate, DiscriminantPartial) {
  auto S = PolyRing::make({"s1", "s2"});
  EXPECT_EQ(differentiate(P(S, "4*s1^3 + 27*s2^2"), 1), P(S, "54*s2"));
}

TEST(Differentiate, IndexOutOfRange) { EXPECT_THROW(differentiate(P(X2(), "x1"), 2), Error); }

TEST(Differentiate, LeibnizAndOracle) {
  auto R = X3();
  std::mt19937_64 rng(42);
  for (int k = 0; k < 25; ++k) {
    Poly p = oracle::random_poly(R, rng), q = oracle::random_poly(R, rng);
    for (int i = 0; i < 3; ++i) {
      EXPECT_EQ(differentiate(p * q, i), p * differentiate(q, i) + q * differentiate(p, i));
      EXPECT_EQ(differentiate(p, i), oracle::derivative(p, i));
    }
  }
}

TEST(SubstituteMap, Coordinate) {
  auto X = X3();
  auto S = PolyRing::make({"s1", "s2"});
  PolyMap phi(X, S, {P(X, "x1^2 + x2^3"), P(X, "x2^2 + x1*x3")});
  EXPECT_EQ(substitute_map(P(S, "s1"), phi), P(X, "x1^2 + x2^3"));
  EXPECT_EQ(substitute_map(P(S, "s1*s2*(s1 + s2)"), phi),
            P(X, "(x1^2 + x2^3)*(x2^2 + x1*x3)*(x1^2 + x2^3 + x2^2 + x1*x3)"));
}

TEST(SubstituteMap, FibresSextic) {
  auto X = PolyRing::make({"s1", "x1", "x2"});
  auto S = PolyRing::make({"s1", "s2"});
  PolyMap phi(X, S, {P(X, "s1"), P(X, "x1^3 + x2^2 + s1*x1")});
  EXPECT_EQ(substitute_map(P(S, "4*s1^3 + 27*s2^2"), phi),
            P(X, "27*x1^6 + 54*x1^3*x2^2 + 54*x1^4*s1 + 27*x2^4 + 54*x1*x2^2*s1 + 27*x1^2*s1^2 + 4*s1^3"));
}

TEST(SubstituteMap, RingMismatch) {
  auto X = X3();
  auto S = PolyRing::make({"s1", "s2"});
  PolyMap phi(X, S, {P(X, "x1"), P(X, "x2")});
  EXPECT_THROW(substitute_map(P(X, "x1"), phi), RingMismatch);
}

TEST(SubstituteMap, Homomorphism) {
  auto X = X3();
  auto S = X2();
  std::mt19937_64 rng(5);
  for (int k = 0; k < 10; ++k) {
    PolyMap phi(X, S, {oracle::random_poly(X, rng, 3, 2), oracle::random_poly(X, rng, 3, 2)});
    Poly p = oracle::random_poly(S, rng, 3, 2), q = oracle::random_poly(S, rng, 3, 2);
    EXPECT_EQ(substitute_map(p + q, phi), substitute_map(p, phi) + substitute_map(q, phi));
    EXPECT_EQ(substitute_map(p * q, phi), substitute_map(p, phi) * substitute_map(q, phi));
    auto pt = oracle::random_point(3, rng);
    std::vector<Rational> img = {oracle::eval(phi.components[0], pt), oracle::eval(phi.components[1], pt)};
    EXPECT_EQ(oracle::eval(substitute_map(p, phi), pt), oracle::eval(p, img));
  }
}

TEST(WeightedDegree, Examples) {
  auto R = X3();
  auto a = weighted_degree(P(R, "x1^2 + x2^3"), {3, 2, 1});
  EXPECT_TRUE(a.homogeneous);
  EXPECT_EQ(a.degree, 6);
  auto R1 = PolyRing::make({"x1"});
  auto b = weighted_degree(P(R1, "x1 + x1^2"), {1});
  EXPECT_FALSE(b.homogeneous);
  ASSERT_TRUE(b.witness.has_value());
  auto S = PolyRing::make({"s1", "s2"});
  auto c = weighted_degree(P(S, "s1*s2*(s1 + s2)"), {1, 1});
  EXPECT_TRUE(c.homogeneous);
  EXPECT_EQ(c.degree, 3);
  EXPECT_THROW(weighted_degree(P(S, "s1"), {0, 0}), Error);
}

TEST(Gcd, Examples) {
  auto R = X2();
  EXPECT_EQ(gcd(P(R, "x1^2*x2"), P(R, "x1*x2^2")), P(R, "x1*x2"));
  EXPECT_EQ(gcd(P(R, "x1^2 + x2"), P(R, "1")), P(R, "1"));
  EXPECT_EQ(gcd(P(R, "-2*x1^2 + 4*x2"), Poly(R)), P(R, "x1^2 - 2*x2"));
  auto M = PolyRing::make({"x1", "x11", "x12", "x21", "x22"});
  Poly d = P(M, "x1*x22 - x12*x21");
  Poly g = gcd(d * d, P(M, "x11") * d);
  EXPECT_TRUE(unit_multiple_eq(g, d).has_value());
  EXPECT_TRUE(exact_divide(d * d, g).has_value());
  EXPECT_TRUE(exact_divide(P(M, "x11") * d, g).has_value());
}

TEST(Gcd, LcmProperty) {
  auto R = X3();
  std::mt19937_64 rng(9);
  for (int k = 0; k < 8; ++k) {
    Poly a = oracle::random_poly(R, rng, 2, 2), b = oracle::random_poly(R, rng, 2, 2), c = oracle::random_poly(R, rng, 2, 2);
    if (a.isZero() || b.isZero() || c.isZero()) continue;
    Poly p = a * c, q = b * c;
    Poly g = gcd(p, q);
    ASSERT_TRUE(exact_divide(p, g).has_value());
    ASSERT_TRUE(exact_divide(q, g).has_value());
    ASSERT_TRUE(exact_divide(g, c).has_value());
    auto pq = exact_divide(p * q, lcm(p, q));
    ASSERT_TRUE(pq.has_value());
    EXPECT_TRUE(unit_multiple_eq(*pq, g).has_value());
  }
}

TEST(SquarefreePart, Examples) {
  auto R = X2();
  EXPECT_EQ(squarefree_part(P(R, "x1^2*x2^3")), P(R, "x1*x2"));
  Poly p = P(R, "x1^3 - x2^2 + x1*x2");
  EXPECT_TRUE(unit_multiple_eq(squarefree_part(p), p).has_value());
  auto M = matrix_ring(2, 2);
  Poly q = P(M, "(x11^2 + x21^2)*(x11*x22 - x12*x21)^2");
  EXPECT_TRUE(unit_multiple_eq(squarefree_part(q), P(M, "(x11^2 + x21^2)*(x11*x22 - x12*x21)")).has_value());
  EXPECT_THROW(squarefree_part(Poly(R)), Error);
}

TEST(SquarefreePart, Properties) {
  auto R = X3();
  std::mt19937_64 rng(13);
  for (int k = 0; k < 6; ++k) {
    Poly a = oracle::random_poly(R, rng, 2, 2), b = oracle::random_poly(R, rng, 2, 2);
    if (a.isConstant() || b.isConstant()) continue;
    Poly p = a * a * b;
    Poly g = squarefree_part(p);
    EXPECT_TRUE(exact_divide(p, g).has_value());
    EXPECT_TRUE(is_squarefree(g));
    EXPECT_TRUE(exact_divide(g, squarefree_part(a)).has_value());
  }
}

TEST(UnitMultiple, Examples) {
  auto R = X2();
  auto c = unit_multiple_eq(P(R, "2*x1"), P(R, "x1"));
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(*c, 2);
  EXPECT_FALSE(unit_multiple_eq(P(R, "x1"), P(R, "x2")).has_value());
}

TEST(Parse, RoundTripAndNormalization) {
  auto R = X3();
  std::mt19937_64 rng(17);
  for (int k = 0; k < 20; ++k) {
    Poly p = oracle::random_poly(R, rng) * Rational(3, 7);
    Poly q = P(R, p.str());
    EXPECT_EQ(p, q);
    EXPECT_EQ(q.str(), p.str());
  }
  Poly n = P(R, "-4*x1^2 + 6*x2/5").normalized();
  EXPECT_EQ(n, P(R, "10*x1^2 - 3*x2"));
  EXPECT_GT(n.leading().c, 0);
}

TEST(Parse, Errors) {
  auto R = X2();
  try {
    P(R, "x1 + y");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column, 6);
  }
  EXPECT_THROW(P(R, "x1 / x2"), ParseError);
  EXPECT_THROW(P(R, "(x1 + x2"), ParseError);
  EXPECT_THROW(P(R, "x1^"), ParseError);
}

}  // namespace
