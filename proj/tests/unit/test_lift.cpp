#include <gtest/gtest.h>

#include "freediv/error.hpp"
#include "oracle.hpp"

using namespace freediv;
using oracle::P;

namespace {

VectorField field(const RingPtr& R, std::vector<std::string> cs) {
  std::vector<Poly> ps;
  for (auto& c : cs) ps.push_back(P(R, c));
  return VectorField(R, ps);
}

PolyMap mapOf(const RingPtr& X, const RingPtr& S, std::vector<std::string> cs) {
  std::vector<Poly> ps;
  for (auto& c : cs) ps.push_back(P(X, c));
  return PolyMap(X, S, ps);
}

PolyMap curveMap() {
  return mapOf(PolyRing::make({"x1", "x2", "x3"}), PolyRing::make({"s1", "s2"}), {"x1^2 + x2^3", "x2^2 + x1*x3"});
}
PolyMap counterexampleMap() {
  return mapOf(PolyRing::make({"x1", "x2", "x3"}), PolyRing::make({"s1", "s2", "s3"}), {"x1*x3 + x2^2", "x2", "x3"});
}
PolyMap fibresMap() {
  return mapOf(PolyRing::make({"x1", "x2", "s1"}, {2, 3, 4}), PolyRing::make({"s1", "s2"}), {"s1", "x1^3 + x2^2 + s1*x1"});
}
PolyMap fourMap() {
  return mapOf(PolyRing::make({"x1", "x2", "x3", "x4"}), PolyRing::make({"s1", "s2", "s3"}),
               {"x1*x3", "x2^2 - x3^3", "x2*x4"});
}

bool zeroModule(const ModulePresentation& M) {
  auto G = buchberger(M);
  for (int i = 0; i < M.rank(); ++i) {
    std::vector<Poly> e(M.rank(), Poly(M.ring()));
    e[i] = Poly::constant(M.ring(), 1);
    if (!in_span(e, G)) return false;
  }
  return true;
}

TEST(Jacobian, Identity) {
  auto S = PolyRing::make({"s1", "s2"});
  auto J = jacobian(mapOf(S, S, {"s1", "s2"}));
  EXPECT_TRUE(module_equal(J, ModulePresentation::identity(S, 2)));
  EXPECT_EQ(J.entry(0, 0), P(S, "1"));
  EXPECT_TRUE(J.entry(0, 1).isZero());
}

TEST(Jacobian, Fibres) {
  auto phi = fibresMap();
  auto J = jacobian(phi);
  auto X = phi.source;
  std::vector<std::vector<std::string>> want = {{"0", "0", "1"}, {"3*x1^2 + s1", "2*x2", "x1"}};
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < 3; ++i) EXPECT_EQ(J.entry(j, i), P(X, want[j][i]));
  EXPECT_TRUE(J.isGraded());
}

TEST(Jacobian, CastlingLinearEntries) {
  auto phi = castling_map(2, PolyRing::make({"s1", "s2", "s3"}));
  auto J = jacobian(phi);
  EXPECT_EQ(J.rank(), 3);
  EXPECT_EQ(J.numColumns(), 6);
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 6; ++i) {
      EXPECT_TRUE(J.entry(j, i).isZero() || J.entry(j, i).totalDegree() == 1);
      EXPECT_EQ(J.entry(j, i), oracle::derivative(phi.components[j], i));
    }
}

TEST(Vertical, CurveMapRankOne) {
  auto phi = curveMap();
  auto V = vertical_fields(phi).compact();
  ASSERT_EQ(V.numColumns(), 1);
  auto eta = eta_generator(phi);
  EXPECT_TRUE(module_equal(V, fields_module(phi.source, {eta})));
}

TEST(Vertical, Projection) {
  auto X = PolyRing::make({"x1", "x2"});
  auto phi = mapOf(X, PolyRing::make({"s1"}), {"x1"});
  EXPECT_TRUE(module_equal(vertical_fields(phi), fields_module(X, {field(X, {"0", "1"})})));
}

TEST(Vertical, CastlingIsSl) {
  for (int n : {2, 3}) {
    std::vector<std::string> s;
    for (int i = 1; i <= n + 1; ++i) s.push_back("s" + std::to_string(i));
    auto phi = castling_map(n, PolyRing::make(s));
    auto rep = sl_left(n, n + 1);
    EXPECT_EQ(int(rep.fields.size()), n * n - 1);
    EXPECT_TRUE(module_equal(vertical_fields(phi), fields_module(phi.source, rep.fields))) << n;
  }
}

TEST(Vertical, AnnihilateComponents) {
  for (const auto& phi : {curveMap(), counterexampleMap(), fourMap(), fibresMap()}) {
    for (const auto& v : module_fields(vertical_fields(phi)))
      for (const auto& c : phi.components) EXPECT_TRUE(apply_field(v, c).isZero());
  }
}

TEST(T1, SubmersionIsZero) {
  auto X = PolyRing::make({"x1", "x2", "x3"});
  auto phi = mapOf(X, PolyRing::make({"s1", "s2"}), {"x1", "x2 + x3^2"});
  EXPECT_TRUE(zeroModule(t1_presentation(phi)));
  EXPECT_TRUE(cm_codim2(t1_presentation(phi)));
}

TEST(T1, CurveMap) {
  auto T = t1_presentation(curveMap());
  EXPECT_FALSE(zeroModule(T));
  EXPECT_EQ(projective_dimension(T), 2);
  EXPECT_TRUE(cm_codim2(T));
}

TEST(T1, CounterexampleNotCM) { EXPECT_FALSE(cm_codim2(t1_presentation(counterexampleMap()))); }

TEST(CM, ZeroModuleAndGrading) {
  auto R = PolyRing::make({"x", "y"});
  EXPECT_TRUE(cm_codim2(ModulePresentation::identity(R, 2)));
  EXPECT_THROW(cm_codim2(ModulePresentation::ideal(R, {P(R, "x + y^2")})), NotGraded);
  EXPECT_TRUE(cm_codim2(ModulePresentation::ideal(R, {P(R, "x"), P(R, "y")})));
  EXPECT_FALSE(cm_codim2(ModulePresentation::ideal(R, {P(R, "x")})));
}

TEST(LiftField, CastlingClosedForm) {
  auto phi = castling_map(2, PolyRing::make({"s1", "s2", "s3"}));
  auto X = phi.source;
  for (int p = 0; p < 3; ++p)
    for (int q = 0; q < 3; ++q) {
      if (p == q) continue;
      VectorField eta = VectorField::zero(phi.target);
      eta.coeffs[q] = Poly::variable(phi.target, p);
      auto w = lift_field(phi, eta);
      ASSERT_TRUE(w.has_value());
      EXPECT_TRUE(w->exact());
      VectorField closed = VectorField::zero(X);
      for (int i = 0; i < 2; ++i) closed.coeffs[i * 3 + p] = -Poly::variable(X, i * 3 + q);
      EXPECT_TRUE(oracle::lift_at_points(phi, eta, closed)) << p << q;
      EXPECT_TRUE(oracle::lift_at_points(phi, eta, castling_lift(phi, 2, p, q)));
    }
}

TEST(LiftField, ZeroComposite) {
  auto X = PolyRing::make({"x1", "x2"});
  auto S = PolyRing::make({"s1", "s2"});
  auto phi = mapOf(X, S, {"x1", "0"});
  auto w = lift_field(phi, field(S, {"s2", "0"}));
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(w->xi.isZero());
}

TEST(LiftField, FibresEuler) {
  auto phi = fibresMap();
  auto w = lift_field(phi, field(phi.target, {"2*s1", "3*s2"}));
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(w->exact());
  EXPECT_TRUE(oracle::lift_at_points(phi, w->eta, w->xi));
  EXPECT_FALSE(lift_field(phi, field(phi.target, {"3*s1", "2*s2"})).has_value());
}

TEST(Liftable, Identity) {
  auto S = PolyRing::make({"s1", "s2"});
  EXPECT_TRUE(module_equal(liftable_module(mapOf(S, S, {"s1", "s2"})), ModulePresentation::identity(S, 2)));
}

TEST(Liftable, Fibres) {
  auto phi = fibresMap();
  EXPECT_TRUE(module_equal(liftable_module(phi), derlog_hypersurface(P(phi.target, "4*s1^3 + 27*s2^2"))));
}

TEST(Liftable, CurveMap) {
  auto phi = curveMap();
  EXPECT_TRUE(module_equal(liftable_module(phi), derlog_hypersurface(P(phi.target, "s1^2 - s2^3"))));
}

TEST(Liftable, FourMapNotFree) {
  auto phi = fourMap();
  auto L = liftable_module(phi);
  auto G = buchberger(L);
  auto S = phi.target;
  for (int i = 0; i < 3; ++i) {
    std::vector<Poly> v(3, Poly(S));
    v[i] = Poly::variable(S, i);
    EXPECT_TRUE(in_span(v, G));
  }
  EXPECT_GT(minimal_generators(L).numColumns(), 3);
}

TEST(Liftable, RoundTrip) {
  for (const auto& phi : {fibresMap(), curveMap(), fourMap()}) {
    Lifter lifter(phi);
    for (const auto& eta : module_fields(liftable_module(phi))) {
      auto w = lifter.lift(eta);
      ASSERT_TRUE(w.has_value());
      EXPECT_TRUE(w->exact());
      EXPECT_TRUE(oracle::lift_at_points(phi, eta, w->xi));
    }
  }
}

TEST(EulerN, CurveMap) { EXPECT_TRUE(cm_codim2(euler_module_N(curveMap(), {1, 1}))); }
TEST(EulerN, Counterexample) { EXPECT_TRUE(cm_codim2(euler_module_N(counterexampleMap(), {1, 1, 1}))); }

TEST(EulerN, SubmersionZeroWeights) {
  auto X = PolyRing::make({"x1", "x2"});
  auto phi = mapOf(X, PolyRing::make({"s1"}), {"x1"});
  EXPECT_TRUE(zeroModule(euler_module_N(phi, {0})));
}

TEST(Multiweight, SingleBlock) {
  auto X = PolyRing::make({"x1", "x2"});
  auto phi = mapOf(X, PolyRing::make({"s1"}), {"x1^2 + x2^3"});
  auto M = multiweight_module(phi, {{1}});
  EXPECT_FALSE(M.degenerate);
  EXPECT_TRUE(module_equal(M.presentation, euler_module_N(phi, {1})));
}

TEST(Multiweight, NormalCrossingsKernel) {
  auto phi = fourMap();
  auto M = normal_crossings_module(phi);
  auto Z = syzygies(M.presentation);
  auto R = M.presentation.ring();
  std::vector<VectorField> ks;
  for (const auto& col : Z.columns()) ks.push_back(VectorField(R, std::vector<Poly>(col.begin(), col.begin() + 4)));
  Poly prod = rering(phi.components[0] * phi.components[1] * phi.components[2], R);
  EXPECT_TRUE(module_equal(fields_module(R, ks), derlog_hypersurface(prod)));
}

TEST(Multiweight, Degenerate) {
  auto X = PolyRing::make({"x1", "x2"});
  auto phi = mapOf(X, PolyRing::make({"s1", "s2"}), {"x1", "0"});
  EXPECT_TRUE(normal_crossings_module(phi).degenerate);
}

TEST(PreimageCodim, Examples) {
  auto S = PolyRing::make({"s1", "s2", "s3"});
  auto phi = castling_map(2, S);
  EXPECT_EQ(preimage_codim(phi, singular_locus_ideal(P(S, "s1*s2*s3"))), 2);
  EXPECT_EQ(preimage_codim(phi, ModulePresentation::ideal(S, {P(S, "1")})), kInfiniteCodim);
  auto X = PolyRing::make({"x1", "x2"});
  auto S1 = PolyRing::make({"s1"});
  EXPECT_EQ(preimage_codim(mapOf(X, S1, {"x1"}), ModulePresentation::ideal(S1, {P(S1, "s1")})), 1);
}

TEST(EtaGenerator, CurveMap) {
  auto phi = curveMap();
  auto eta = eta_generator(phi);
  auto want = field(phi.source, {"-3*x1*x2^2", "2*x1^2", "-(4*x1*x2 - 3*x2^2*x3)"});
  bool unit = true;
  std::optional<Rational> c;
  for (int i = 0; i < 3; ++i) {
    auto u = unit_multiple_eq(eta.coeffs[i], want.coeffs[i]);
    if (!u || (c && *c != *u)) unit = false;
    if (u) c = u;
  }
  EXPECT_TRUE(unit);
}

TEST(EtaGenerator, Projection) {
  auto X = PolyRing::make({"x1", "x2", "x3"});
  auto eta = eta_generator(mapOf(X, PolyRing::make({"s1", "s2"}), {"x1", "x2"}));
  EXPECT_TRUE(eta.coeffs[0].isZero());
  EXPECT_TRUE(eta.coeffs[1].isZero());
  EXPECT_TRUE(eta.coeffs[2].isConstant() && !eta.coeffs[2].isZero());
}

TEST(EtaGenerator, FourMap) {
  auto phi = fourMap();
  auto eta = eta_generator(phi);
  EXPECT_FALSE(eta.isZero());
  for (const auto& r : push_forward(phi, eta)) EXPECT_TRUE(r.isZero());
  auto w = find_map_weights(phi);
  ASSERT_TRUE(w.has_value());
  std::optional<long> shift;
  for (int i = 0; i < 4; ++i) {
    if (eta.coeffs[i].isZero()) continue;
    auto d = weighted_degree(eta.coeffs[i], w->first);
    ASSERT_TRUE(d.homogeneous);
    if (shift) EXPECT_EQ(*shift, d.degree - w->first[i]);
    shift = d.degree - w->first[i];
  }
}

TEST(EtaGenerator, WrongCodim) {
  auto X = PolyRing::make({"x1", "x2", "x3"});
  EXPECT_THROW(eta_generator(mapOf(X, PolyRing::make({"s1", "s2"}), {"x1^2", "x2"})), Error);
}

}  // namespace
