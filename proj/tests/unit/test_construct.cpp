#include <gtest/gtest.h>

#include "freediv/error.hpp"
#include "oracle.hpp"

using namespace freediv;
using oracle::P;

namespace {

PolyMap mapOf(const RingPtr& X, const RingPtr& S, std::vector<std::string> cs) {
  std::vector<Poly> ps;
  for (auto& c : cs) ps.push_back(P(X, c));
  return PolyMap(X, S, ps);
}

PolyMap fibresMap() {
  return mapOf(PolyRing::make({"s1", "x1", "x2"}), PolyRing::make({"s1", "s2"}), {"s1", "x1^3 + x2^2 + s1*x1"});
}
PolyMap curveMap() {
  return mapOf(PolyRing::make({"x1", "x2", "x3"}), PolyRing::make({"s1", "s2"}), {"x1^2 + x2^3", "x2^2 + x1*x3"});
}
PolyMap counterexampleMap() {
  return mapOf(PolyRing::make({"x1", "x2", "x3"}), PolyRing::make({"s1", "s2", "s3"}), {"x1*x3 + x2^2", "x2", "x3"});
}

const char* kSextic = "27*x1^6 + 54*x1^3*x2^2 + 54*x1^4*s1 + 27*x2^4 + 54*x1*x2^2*s1 + 27*x1^2*s1^2 + 4*s1^3";
const char* kCurveDivisor = "x1*(-3*x2^4*x3 - 3*x1*x2^2*x3^2 - x1^2*x3^3 + 2*x1*x2^3 + x1^3)";

void expectCertificate(const PipelineReport& r) {
  ASSERT_TRUE(r.success()) << r.failure.value_or("");
  const auto& c = *r.certificate;
  EXPECT_TRUE(c.verify());
  EXPECT_TRUE(oracle::saito_identity_at_points(c));
  for (const auto& v : c.basis) EXPECT_TRUE(is_logarithmic(v, c.divisorEquation));
  EXPECT_EQ(int(c.basis.size()), c.divisorEquation.ring()->arity());
  EXPECT_EQ(c.provenance.size(), c.basis.size());
}

int count(const FreeDivisorCertificate& c, Provenance p) {
  int k = 0;
  for (auto q : c.provenance) k += q == p;
  return k;
}

TEST(Pullback, FibresStrong) {
  auto phi = fibresMap();
  auto r = pullback_main(phi, P(phi.target, "4*s1^3 + 27*s2^2"), PullbackMode::Strong);
  expectCertificate(r);
  EXPECT_TRUE(r.allPassed());
  EXPECT_TRUE(unit_multiple_eq(r.certificate->determinant, P(phi.source, kSextic)).has_value());
  EXPECT_EQ(count(*r.certificate, Provenance::Vertical), 1);
  EXPECT_EQ(count(*r.certificate, Provenance::Lifted), 2);
}

TEST(Pullback, FibresWeak) {
  auto phi = fibresMap();
  auto r = pullback_main(phi, P(phi.target, "4*s1^3 + 27*s2^2"), PullbackMode::Weak);
  expectCertificate(r);
  const Hypothesis* h = r.find(hyp::kPreimageCodim);
  ASSERT_NE(h, nullptr);
  EXPECT_EQ(h->status, HypothesisStatus::Pass);
}

TEST(Pullback, CurveMap) {
  auto phi = curveMap();
  auto r = pullback_main(phi, P(phi.target, "s1^2 - s2^3"), PullbackMode::Strong);
  expectCertificate(r);
  EXPECT_TRUE(unit_multiple_eq(r.certificate->divisorEquation, P(phi.source, kCurveDivisor)).has_value());
  ModulePresentation V = fields_module(phi.source, {eta_generator(phi)});
  bool found = false;
  for (std::size_t i = 0; i < r.certificate->basis.size(); ++i)
    if (r.certificate->provenance[i] == Provenance::Vertical)
      found = module_equal(fields_module(phi.source, {r.certificate->basis[i]}), V);
  EXPECT_TRUE(found);
}

TEST(Pullback, Identity) {
  auto S = PolyRing::make({"s1", "s2"});
  Poly f = P(S, "s1^2 - s2^3");
  auto r = pullback_main(mapOf(S, S, {"s1", "s2"}), f, PullbackMode::Strong);
  expectCertificate(r);
  EXPECT_TRUE(r.allPassed());
  EXPECT_TRUE(unit_multiple_eq(r.certificate->divisorEquation, f).has_value());
}

TEST(Pullback, StrongFailureNamesT1) {
  auto phi = counterexampleMap();
  auto r = pullback_main(phi, P(phi.target, "s1*s2*s3"), PullbackMode::Strong);
  EXPECT_FALSE(r.success());
  ASSERT_TRUE(r.failure.has_value());
  EXPECT_NE(r.failure->find("T1 not Cohen-Macaulay of codimension 2"), std::string::npos);
  EXPECT_EQ(r.find(hyp::kT1)->status, HypothesisStatus::Fail);
}

TEST(Pullback, ImageInsideDivisor) {
  auto X = PolyRing::make({"x1", "x2"});
  auto S = PolyRing::make({"s1", "s2"});
  auto r = pullback_main(mapOf(X, S, {"x1", "0"}), P(S, "s1*s2"), PullbackMode::Strong);
  EXPECT_FALSE(r.success());
  EXPECT_EQ(r.find(hyp::kNonzero)->status, HypothesisStatus::Fail);
}

TEST(Pullback, TargetNotFree) {
  auto X = PolyRing::make({"x", "y", "z"});
  auto r = pullback_main(mapOf(X, X, {"x", "y", "z"}), P(X, "x*y*z*(x + y + z)"), PullbackMode::Strong);
  EXPECT_FALSE(r.success());
  EXPECT_EQ(r.find(hyp::kTargetFree)->status, HypothesisStatus::Fail);
}

TEST(Pullback, StrongImpliesWeak) {
  std::vector<std::pair<PolyMap, std::string>> cases = {{fibresMap(), "4*s1^3 + 27*s2^2"}, {curveMap(), "s1^2 - s2^3"}};
  for (auto& [phi, f] : cases) {
    auto s = pullback_main(phi, P(phi.target, f), PullbackMode::Strong);
    auto w = pullback_main(phi, P(phi.target, f), PullbackMode::Weak);
    ASSERT_TRUE(s.success());
    EXPECT_TRUE(w.success());
  }
}

TEST(EulerVariant, CurveMapNoEulerLikeField) {
  auto phi = curveMap();
  auto r = euler_variant(phi, P(phi.target, "s1*s2*(s1 + s2)"), {1, 1});
  expectCertificate(r);
  bool noted = false;
  for (const auto& n : r.notes) noted = noted || n.find("no Euler-like") != std::string::npos;
  EXPECT_TRUE(noted);
  EXPECT_EQ(r.find(hyp::kN)->status, HypothesisStatus::Pass);
}

TEST(EulerVariant, Counterexample) {
  auto phi = counterexampleMap();
  for (const char* f : {"s1*s2*s3", "s1*s3*(s1*s3 - s2^2)"}) {
    auto r = euler_variant(phi, P(phi.target, f), {1, 1, 1});
    expectCertificate(r);
    EXPECT_TRUE(r.allPassed()) << f;
  }
}

TEST(EulerVariant, NonHomogeneousRejected) {
  auto phi = counterexampleMap();
  auto r = euler_variant(phi, P(phi.target, "s1*s2*s3 + s1"), {1, 1, 1});
  EXPECT_FALSE(r.success());
  EXPECT_EQ(r.find(hyp::kWeighted)->status, HypothesisStatus::Fail);
}

TEST(Ffstar, IterationFromLine) {
  auto R1 = PolyRing::make({"x11"});
  auto a = ffstar(P(R1, "x11"), {P(R1, "1")}, {"x12"});
  expectCertificate(a);
  auto R2 = a.divisor->ring();
  EXPECT_EQ(R2->vars(), (std::vector<std::string>{"x11", "x12"}));
  auto b = ffstar(*a.divisor, {P(R2, "x11"), P(R2, "-x12")}, {"x22", "x21"});
  expectCertificate(b);
  auto M = matrix_ring(2, 2);
  std::vector<int> perm;
  for (const auto& v : b.divisor->ring()->vars()) perm.push_back(M->indexOf(v));
  Poly got = change_ring(*b.divisor, M, perm);
  EXPECT_TRUE(unit_multiple_eq(got, P(M, "x11*x12*(x11*x22 - x12*x21)")).has_value());
}

TEST(Ffstar, SmoothProductUnion) {
  auto R = PolyRing::make({"x1"});
  auto r = ffstar(P(R, "x1"), {P(R, "1")});
  expectCertificate(r);
  bool noted = false;
  for (const auto& n : r.notes) noted = noted || n.find("product-union") != std::string::npos;
  EXPECT_TRUE(noted);
}

TEST(Ffstar, NormalCrossingsCanonicalIdeal) {
  auto R = PolyRing::make({"x1", "x2"});
  auto r = ffstar(P(R, "x1*x2"), {P(R, "x2"), P(R, "x1"), P(R, "x1*x2")});
  expectCertificate(r);
  auto T = r.divisor->ring();
  EXPECT_TRUE(unit_multiple_eq(*r.divisor, P(T, "x1*x2*(x2*y1 + x1*y2 + x1*x2*y3)")).has_value());
  auto fr = is_free_saito(*r.divisor);
  EXPECT_TRUE(fr.free());
}

TEST(Ffstar, VerticalFieldsAreSyzygies) {
  auto R = PolyRing::make({"x1", "x2"});
  std::vector<Poly> g = {P(R, "x2"), P(R, "x1"), P(R, "x1*x2")};
  auto r = ffstar(P(R, "x1*x2"), g);
  ASSERT_TRUE(r.success());
  auto T = r.divisor->ring();
  auto Z = syzygies(ModulePresentation::fromRows(R, {g}));
  std::vector<VectorField> lifted;
  for (const auto& col : Z.columns()) {
    VectorField v = VectorField::zero(T);
    for (int k = 0; k < 3; ++k) v.coeffs[2 + k] = change_ring(col[k], T, {0, 1});
    lifted.push_back(v);
  }
  std::vector<VectorField> vertical;
  for (std::size_t i = 0; i < r.certificate->basis.size(); ++i)
    if (r.certificate->provenance[i] == Provenance::Vertical) vertical.push_back(r.certificate->basis[i]);
  EXPECT_TRUE(module_equal(fields_module(T, vertical), fields_module(T, lifted)));
}

TEST(Ffstar, ContainmentFailure) {
  auto R = PolyRing::make({"x1", "x2"});
  auto r = ffstar(P(R, "x1"), {P(R, "x1 + x2"), P(R, "x2^2")});
  EXPECT_FALSE(r.success());
}

TEST(FfstarCanonical, Line) {
  auto R = PolyRing::make({"x1"});
  auto r = ffstar_canonical(P(R, "x1"));
  expectCertificate(r);
  EXPECT_TRUE(unit_multiple_eq(*r.divisor, P(r.divisor->ring(), "x1*(x1*y2 + y1)")).has_value());
}

TEST(FfstarCanonical, NormalCrossingsVariants) {
  auto R = PolyRing::make({"x1", "x2"});
  auto r = ffstar_canonical(P(R, "x1*x2"));
  expectCertificate(r);
  ASSERT_EQ(r.variants.size(), 1u);
  expectCertificate(r.variants[0]);
}

TEST(FfstarCanonical, Cusp) {
  auto R = PolyRing::make({"s1", "s2"});
  auto r = ffstar_canonical(P(R, "s1^2 - s2^3"));
  expectCertificate(r);
  EXPECT_EQ(r.divisor->ring()->arity(), 5);
}

TEST(Castling, NormalCrossings) {
  auto S = PolyRing::make({"s1", "s2", "s3"});
  auto r = castling(P(S, "s1*s2*s3"), 2);
  expectCertificate(r);
  auto phi = castling_map(2, S);
  Poly want = phi.components[0] * phi.components[1] * phi.components[2];
  EXPECT_TRUE(unit_multiple_eq(r.certificate->divisorEquation, want).has_value());
  EXPECT_EQ(count(*r.certificate, Provenance::Vertical), 3);
  EXPECT_EQ(count(*r.certificate, Provenance::Lifted), 3);
  for (const auto& v : r.certificate->basis)
    for (const auto& c : v.coeffs) EXPECT_TRUE(c.isZero() || c.totalDegree() == 1);
}

TEST(Castling, CuspCone) {
  auto S = PolyRing::make({"s1", "s2", "s3"});
  auto r = castling(P(S, "s1*(s1*s3 - s2^2)"), 2);
  expectCertificate(r);
  auto M = matrix_ring(2, 3);
  Poly want = P(M,
                "(x12*x23 - x13*x22)*(-x12*x23*x11*x22 + x12^2*x23*x21 + x13*x22^2*x11 - x13*x22*x12*x21"
                " + x11^2*x23^2 - 2*x11*x23*x13*x21 + x13^2*x21^2)");
  EXPECT_TRUE(unit_multiple_eq(r.certificate->divisorEquation, want).has_value());
  EXPECT_EQ(count(*r.certificate, Provenance::Lifted), 3);
}

TEST(Castling, SuspendedRejected) {
  auto S = PolyRing::make({"s1", "s2", "s3"});
  auto r = castling(P(S, "s1"), 2);
  EXPECT_FALSE(r.success());
  EXPECT_EQ(r.find(hyp::kNotSuspended)->status, HypothesisStatus::Fail);
}

TEST(Castling, PlaneCurveN1) {
  auto S = PolyRing::make({"s1", "s2"});
  auto r = castling(P(S, "s1^2 - s2^3"), 1);
  expectCertificate(r);
  auto phi = castling_map(1, S);
  EXPECT_EQ(phi.components[0].totalDegree(), 1);
  EXPECT_TRUE(unit_multiple_eq(*r.divisor, substitute_map(P(S, "s1^2 - s2^3"), phi)).has_value());
}

}  // namespace
