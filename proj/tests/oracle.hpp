#pragma once

// Independent reference computations for tests: dense evaluation at rational
// points and plain Gaussian elimination, sharing no code with the engine.

#include <random>
#include <string>
#include <vector>

#include "freediv/construct.hpp"
#include "freediv/parse.hpp"
#include "freediv/rep.hpp"

namespace oracle {

using freediv::Poly;
using freediv::Rational;
using freediv::RingPtr;

inline Poly P(const RingPtr& R, const std::string& s) { return freediv::parse_poly(s, R); }

inline Rational eval(const Poly& p, const std::vector<Rational>& pt) {
  Rational acc = 0;
  for (const auto& t : p.terms()) {
    Rational v = t.c;
    for (std::size_t i = 0; i < pt.size(); ++i)
      for (int k = 0; k < t.m.e[i]; ++k) v *= pt[i];
    acc += v;
  }
  return acc;
}

inline std::vector<Rational> random_point(int n, std::mt19937_64& rng, int range = 50) {
  std::uniform_int_distribution<int> d(-range, range);
  std::vector<Rational> pt(n);
  for (auto& x : pt) {
    x = Rational(d(rng), 1 + (d(rng) + range) % 7);
    x.canonicalize();
  }
  return pt;
}

inline Rational det(std::vector<std::vector<Rational>> A) {
  int n = int(A.size());
  Rational d = 1;
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && A[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(A[p], A[c]);
      d = -d;
    }
    d *= A[c][c];
    for (int r = c + 1; r < n; ++r) {
      Rational q = A[r][c] / A[c][c];
      for (int k = c; k < n; ++k) A[r][k] -= q * A[c][k];
    }
  }
  return d;
}

inline int rank(std::vector<std::vector<Rational>> A) {
  int rows = int(A.size());
  if (!rows) return 0;
  int cols = int(A[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && A[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(A[p], A[r]);
    for (int i = 0; i < rows; ++i) {
      if (i == r || A[i][c] == 0) continue;
      Rational q = A[i][c] / A[r][c];
      for (int k = c; k < cols; ++k) A[i][k] -= q * A[r][k];
    }
    ++r;
  }
  return r;
}

// p(pt) = c * q(pt) at several random points with one fixed c.
inline bool unit_multiple_at_points(const Poly& p, const Poly& q, int trials = 6, std::uint64_t seed = 7) {
  std::mt19937_64 rng(seed);
  int n = p.ring()->arity();
  std::optional<Rational> c;
  bool sawNonzero = false;
  for (int t = 0; t < trials; ++t) {
    auto pt = random_point(n, rng);
    Rational a = eval(p, pt), b = eval(q, pt);
    if (b == 0) {
      if (a != 0) return false;
      continue;
    }
    sawNonzero = true;
    Rational r = a / b;
    if (r == 0) return false;
    if (c && *c != r) return false;
    c = r;
  }
  return sawNonzero;
}

// det of the Saito matrix equals unitFactor * f at random points.
inline bool saito_identity_at_points(const freediv::FreeDivisorCertificate& c, int trials = 5,
                                     std::uint64_t seed = 11) {
  std::mt19937_64 rng(seed);
  int n = c.divisorEquation.ring()->arity();
  if (int(c.basis.size()) != n) return false;
  for (int t = 0; t < trials; ++t) {
    auto pt = random_point(n, rng);
    std::vector<std::vector<Rational>> A(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) A[i][j] = eval(c.basis[j].coeffs[i], pt);
    if (det(A) != c.unitFactor * eval(c.divisorEquation, pt)) return false;
  }
  return true;
}

// Dense derivative by term iteration.
inline Poly derivative(const Poly& p, int i) {
  std::vector<Poly::Term> out;
  for (const auto& t : p.terms()) {
    if (!t.m.e[i]) continue;
    Poly::Term u = t;
    u.c *= t.m.e[i];
    u.m.e[i] -= 1;
    u.m.refresh();
    out.push_back(u);
  }
  return Poly(p.ring(), out);
}

inline Poly random_poly(const RingPtr& R, std::mt19937_64& rng, int terms = 4, int maxExp = 3) {
  std::uniform_int_distribution<int> e(0, maxExp), c(-9, 9);
  std::vector<Poly::Term> ts;
  for (int k = 0; k < terms; ++k) {
    Poly::Term t;
    for (int i = 0; i < R->arity(); ++i) t.m.e[i] = uint16_t(e(rng));
    t.m.refresh();
    t.c = c(rng);
    ts.push_back(t);
  }
  return Poly(R, ts);
}

// Jac(phi) * xi == eta o phi, evaluated at random points of the source.
inline bool lift_at_points(const freediv::PolyMap& phi, const freediv::VectorField& eta,
                           const freediv::VectorField& xi, int trials = 4, std::uint64_t seed = 3) {
  std::mt19937_64 rng(seed);
  int n = phi.sourceArity(), m = phi.targetArity();
  for (int t = 0; t < trials; ++t) {
    auto pt = random_point(n, rng);
    std::vector<Rational> img(m);
    for (int j = 0; j < m; ++j) img[j] = eval(phi.components[j], pt);
    for (int j = 0; j < m; ++j) {
      Rational lhs = 0;
      for (int i = 0; i < n; ++i) lhs += eval(derivative(phi.components[j], i), pt) * eval(xi.coeffs[i], pt);
      if (lhs != eval(eta.coeffs[j], img)) return false;
    }
  }
  return true;
}

}  // namespace oracle
