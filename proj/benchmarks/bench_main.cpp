#include <benchmark/benchmark.h>

#include "freediv/construct.hpp"
#include "freediv/parse.hpp"

using namespace freediv;

namespace {

Poly parse(const RingPtr& R, const std::string& s) { return parse_poly(s, R); }

PolyMap curveMap() {
  auto X = PolyRing::make({"x1", "x2", "x3"});
  auto S = PolyRing::make({"s1", "s2"});
  return PolyMap(X, S, {parse(X, "x1^2 + x2^3"), parse(X, "x2^2 + x1*x3")});
}

void BM_GroebnerJacobian(benchmark::State& state) {
  auto R = PolyRing::make({"x", "y", "z"});
  Poly f = parse(R, "x*y*z*(x - y)*(x - z)*(y - z)");
  auto J = singular_locus_ideal(f);
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(J));
}
BENCHMARK(BM_GroebnerJacobian)->Unit(benchmark::kMillisecond);

void BM_Derlog(benchmark::State& state) {
  auto R = PolyRing::make({"z0", "z1", "z2", "z3"});
  Poly f = parse(R, "-3*z1^2*z2^2 + 4*z0*z2^3 + 4*z1^3*z3 - 6*z0*z1*z2*z3 + z0^2*z3^2");
  for (auto _ : state) benchmark::DoNotOptimize(derlog_hypersurface(f));
}
BENCHMARK(BM_Derlog)->Unit(benchmark::kMillisecond);

void BM_Liftable(benchmark::State& state) {
  auto phi = curveMap();
  for (auto _ : state) benchmark::DoNotOptimize(liftable_module(phi));
}
BENCHMARK(BM_Liftable)->Unit(benchmark::kMillisecond);

void BM_Castling(benchmark::State& state) {
  auto S = PolyRing::make({"s1", "s2", "s3"});
  Poly f = parse(S, "s1*(s1*s3 - s2^2)");
  for (auto _ : state) benchmark::DoNotOptimize(castling(f, 2));
}
BENCHMARK(BM_Castling)->Unit(benchmark::kMillisecond);

void BM_SaitoCorpus(benchmark::State& state) {
  auto R = PolyRing::make({"s1", "x1", "x2"});
  Poly f = parse(R, "27*x1^6 + 54*x1^3*x2^2 + 54*x1^4*s1 + 27*x2^4 + 54*x1*x2^2*s1 + 27*x1^2*s1^2 + 4*s1^3");
  for (auto _ : state) benchmark::DoNotOptimize(is_free_saito(f));
}
BENCHMARK(BM_SaitoCorpus)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
