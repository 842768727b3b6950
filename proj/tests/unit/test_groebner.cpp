#include <gtest/gtest.h>

#include "freediv/error.hpp"
#include "oracle.hpp"

using namespace freediv;
using oracle::P;

namespace {

ModulePresentation ideal(const RingPtr& R, std::vector<std::string> gens) {
  std::vector<Poly> ps;
  for (auto& g : gens) ps.push_back(P(R, g));
  return ModulePresentation::ideal(R, ps);
}

std::vector<Poly> apply(const ModulePresentation& M, const std::vector<Poly>& v) {
  std::vector<Poly> out(M.rank(), Poly(M.ring()));
  for (int j = 0; j < M.numColumns(); ++j)
    for (int i = 0; i < M.rank(); ++i) out[i] += M.entry(i, j) * v[j];
  return out;
}

bool allZero(const std::vector<Poly>& v) {
  for (auto& p : v)
    if (!p.isZero()) return false;
  return true;
}

PolyMap curveMap() {
  auto X = PolyRing::make({"x1", "x2", "x3"});
  auto S = PolyRing::make({"s1", "s2"});
  return PolyMap(X, S, {P(X, "x1^2 + x2^3"), P(X, "x2^2 + x1*x3")});
}

TEST(Buchberger, Principal) {
  auto R = PolyRing::make({"x1"});
  auto G = buchberger(ideal(R, {"x1"}));
  ASSERT_EQ(G.generators.size(), 1u);
  EXPECT_EQ(G.generators[0][0], P(R, "x1"));
}

TEST(Buchberger, MonomialIdeal) {
  auto R = PolyRing::make({"x1", "x2"});
  auto G = buchberger(ideal(R, {"x1^2", "x1*x2"}));
  ASSERT_EQ(G.generators.size(), 2u);
  std::vector<Poly> got = {G.generators[0][0].monic(), G.generators[1][0].monic()};
  EXPECT_TRUE((got[0] == P(R, "x1^2") && got[1] == P(R, "x1*x2")) ||
              (got[1] == P(R, "x1^2") && got[0] == P(R, "x1*x2")));
  EXPECT_TRUE(G.selfCheck());
}

TEST(Buchberger, JacobianMinorsCodimTwo) {
  auto phi = curveMap();
  auto J = jacobian(phi);
  auto G = buchberger(J);
  EXPECT_TRUE(G.selfCheck());
  PolyMatrix A = J.rows();
  auto mins = minors(A, 2, phi.source);
  auto I = ModulePresentation::ideal(phi.source, mins);
  EXPECT_EQ(phi.sourceArity() - krull_dim(I), 2);
}

TEST(Buchberger, Budget) {
  auto R = PolyRing::make({"x", "y", "z"});
  EngineOptions o;
  o.budget = 3;
  EXPECT_THROW(buchberger(ideal(R, {"x^3 - y*z^2 + 1", "y^4 - x*z + z^2", "z^3*x - y^2 + x"}), o), BudgetExceeded);
}

TEST(Buchberger, Deterministic) {
  auto R = PolyRing::make({"x", "y", "z"});
  auto M = ideal(R, {"x^2*y - z^3", "x*z^2 - y^2", "y^3 - x*y*z"});
  auto a = buchberger(M), b = buchberger(M);
  ASSERT_EQ(a.generators.size(), b.generators.size());
  for (std::size_t i = 0; i < a.generators.size(); ++i) EXPECT_EQ(a.generators[i], b.generators[i]);
}

TEST(NormalForm, Examples) {
  auto R = PolyRing::make({"x1", "x2"});
  auto G = buchberger(ideal(R, {"x1"}));
  EXPECT_TRUE(normal_form({P(R, "x1^2")}, G)[0].isZero());
  EXPECT_EQ(normal_form({P(R, "x2")}, G)[0], P(R, "x2"));
}

TEST(NormalForm, SwallowtailInJacobianIdeal) {
  auto X = PolyRing::make({"s1", "x1", "x2"});
  Poly g = P(X, "27*x1^6 + 54*x1^3*x2^2 + 54*x1^4*s1 + 27*x2^4 + 54*x1*x2^2*s1 + 27*x1^2*s1^2 + 4*s1^3");
  std::vector<Poly> gens = {differentiate(g, 0), differentiate(g, 1), differentiate(g, 2)};
  auto G = buchberger(ModulePresentation::ideal(X, gens));
  EXPECT_TRUE(normal_form({g}, G)[0].isZero());
}

TEST(NormalForm, DifferenceInSpan) {
  auto R = PolyRing::make({"x", "y", "z"});
  auto M = ideal(R, {"x^2 - y*z", "y^2 - x*z"});
  auto G = buchberger(M);
  std::mt19937_64 rng(1);
  for (int k = 0; k < 10; ++k) {
    Poly v = oracle::random_poly(R, rng);
    Poly r = normal_form({v}, G)[0];
    EXPECT_TRUE(in_span({v - r}, G));
    EXPECT_EQ(normal_form({r}, G)[0], r);
  }
}

TEST(Syzygies, Koszul) {
  auto R = PolyRing::make({"x1", "x2"});
  auto M = ModulePresentation::fromRows(R, {{P(R, "x1"), P(R, "x2")}});
  auto Z = syzygies(M);
  EXPECT_TRUE(module_equal(Z, ModulePresentation(R, 2, {{P(R, "x2"), P(R, "-x1")}})));
}

TEST(Syzygies, IdentityHasNone) {
  auto R = PolyRing::make({"x1", "x2"});
  EXPECT_TRUE(syzygies(ModulePresentation::identity(R, 2)).compact().numColumns() == 0);
}

TEST(Syzygies, CastlingKernelIsSl2) {
  auto S = PolyRing::make({"s1", "s2", "s3"});
  PolyMap phi = castling_map(2, S);
  auto Z = syzygies(jacobian(phi));
  auto rep = sl_left(2, 3);
  EXPECT_TRUE(module_equal(Z, fields_module(phi.source, rep.fields)));
}

TEST(Syzygies, ResidualsZero) {
  auto R = PolyRing::make({"x", "y", "z"});
  std::vector<ModulePresentation> cases = {
      ideal(R, {"x^2 - y*z", "y^2 - x*z", "z^2 - x*y"}),
      jacobian(curveMap()),
      ModulePresentation::fromRows(R, {{P(R, "x"), P(R, "y"), P(R, "z"), P(R, "x*y")},
                                       {P(R, "y"), P(R, "z"), P(R, "x"), P(R, "0")}})};
  for (const auto& M : cases) {
    auto Z = syzygies(M);
    for (int j = 0; j < Z.numColumns(); ++j) EXPECT_TRUE(allZero(apply(M, Z.column(j))));
  }
}

TEST(Eliminate, IntersectionGivesLcm) {
  auto R = PolyRing::make({"t", "x", "y"});
  Poly f = P(R, "x^2 - y"), g = P(R, "x*y + 1");
  auto M = ModulePresentation::ideal(R, {P(R, "t") * f, (P(R, "1") - P(R, "t")) * g});
  auto E = eliminate(M, {0}).compact();
  ASSERT_EQ(E.numColumns(), 1);
  Poly h = E.entry(0, 0);
  EXPECT_TRUE(exact_divide(h, f).has_value());
  EXPECT_TRUE(exact_divide(h, g).has_value());
  EXPECT_TRUE(unit_multiple_eq(h, f * g).has_value());
}

TEST(Eliminate, ZeroIdeal) {
  auto R = PolyRing::make({"x1", "s1"});
  auto E = eliminate(ideal(R, {"x1 - s1"}), {0}).compact();
  EXPECT_EQ(E.numColumns(), 0);
}

TEST(Eliminate, NoKilledVariablesAndContained) {
  auto R = PolyRing::make({"a", "b", "x", "y"});
  auto M = ideal(R, {"x - a^2", "y - a*b", "b^2 - a"});
  auto E = eliminate(M, {0, 1});
  auto G = buchberger(M);
  for (int j = 0; j < E.numColumns(); ++j) {
    for (const auto& t : E.entry(0, j).terms()) EXPECT_EQ(t.m.e[0] + t.m.e[1], 0);
    EXPECT_TRUE(in_span(E.column(j), G));
  }
  EXPECT_GT(E.compact().numColumns(), 0);
}

TEST(KernelOfMap, Colon) {
  auto R = PolyRing::make({"x1", "x2"});
  auto K = kernel_of_map(ideal(R, {"x1"}), ideal(R, {"x2"}));
  EXPECT_TRUE(module_equal(K, ideal(R, {"x2"})));
}

TEST(KernelOfMap, IdentityAgainstZero) {
  auto R = PolyRing::make({"x1", "x2"});
  auto K = kernel_of_map(ModulePresentation::identity(R, 2), ModulePresentation(R, 2, {}));
  EXPECT_EQ(K.compact().numColumns(), 0);
}

TEST(KernelOfMap, DimensionMismatch) {
  auto R = PolyRing::make({"x1", "x2"});
  EXPECT_THROW(kernel_of_map(ModulePresentation::identity(R, 2), ideal(R, {"x1"})), Error);
}

TEST(KrullDim, Examples) {
  auto R = PolyRing::make({"x1", "x2", "x3"});
  EXPECT_EQ(krull_dim(ideal(R, {"x1", "x2*x3"})), 1);
  EXPECT_EQ(krull_dim(ideal(R, {"1"})), -1);
  auto M = matrix_ring(2, 3);
  auto I = ModulePresentation::ideal(M, minors(generic_matrix(M, 2, 3), 2, M));
  EXPECT_EQ(krull_dim(I), 4);
}

TEST(KrullDim, HilbertCrossCheck) {
  auto R = PolyRing::make({"x", "y", "z", "w"});
  std::vector<ModulePresentation> cases = {ideal(R, {"x*y", "z*w"}), ideal(R, {"x^2 - y*z", "w^3"}),
                                           ideal(R, {"x", "y", "z"}), jacobian(castling_map(2, PolyRing::make({"a", "b", "c"})))};
  for (const auto& M : cases) {
    auto h = hilbert_dim(M);
    ASSERT_TRUE(h.has_value());
    EXPECT_EQ(*h, module_dim(M));
  }
}

TEST(Resolution, Identity) {
  auto R = PolyRing::make({"x1", "x2"});
  auto res = minimal_resolution(ModulePresentation::identity(R, 2));
  EXPECT_TRUE(res.zeroModule());
}

TEST(Resolution, Koszul) {
  auto R = PolyRing::make({"x1", "x2"});
  auto res = minimal_resolution(ModulePresentation::fromRows(R, {{P(R, "x1"), P(R, "x2")}}));
  EXPECT_EQ(res.pdim(), 2);
}

TEST(Resolution, CurveT1HasPdimTwo) {
  auto T = t1_presentation(curveMap());
  EXPECT_EQ(projective_dimension(T), 2);
}

TEST(Resolution, ComplexAndMinimal) {
  auto R = PolyRing::make({"x", "y", "z"});
  std::vector<ModulePresentation> cases = {ideal(R, {"x^2", "x*y", "y^2", "z^3"}), t1_presentation(curveMap()),
                                           ideal(R, {"x*y", "y*z", "x*z"})};
  for (const auto& M : cases) {
    auto res = minimal_resolution(M);
    for (std::size_t k = 0; k + 1 < res.differentials.size(); ++k) {
      const auto& d0 = res.differentials[k];
      const auto& d1 = res.differentials[k + 1];
      for (int j = 0; j < d1.numColumns(); ++j) EXPECT_TRUE(allZero(apply(d0, d1.column(j))));
    }
    for (const auto& d : res.differentials)
      for (const auto& col : d.columns())
        for (const auto& e : col) EXPECT_TRUE(e.isZero() || !e.isConstant());
    int depth = M.ring()->arity() - res.pdim();
    EXPECT_GE(depth, 0);
  }
}

TEST(Resolution, RequiresGrading) {
  auto R = PolyRing::make({"x", "y"});
  EXPECT_THROW(minimal_resolution(ideal(R, {"x + y^2"})), NotGraded);
}

TEST(ModuleEqual, Examples) {
  auto R = PolyRing::make({"x1", "x2"});
  auto M = ModulePresentation(R, 2, {{P(R, "x1"), P(R, "x2")}, {P(R, "x2^2"), P(R, "0")}});
  auto N = ModulePresentation(R, 2, {{P(R, "x2^2"), P(R, "0")}, {P(R, "x1"), P(R, "x2")}});
  EXPECT_TRUE(module_equal(M, N));
  EXPECT_FALSE(module_equal(ideal(R, {"x1"}), ideal(R, {"x1^2"})));
}

}  // namespace
