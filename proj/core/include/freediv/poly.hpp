#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "freediv/ring.hpp"

namespace freediv {

// Sparse polynomial over Q; terms kept sorted by the ring order, descending.
class Poly {
 public:
  struct Term {
    Monomial m;
    Rational c;
  };

  Poly() = default;
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}
  // Sorts, merges equal monomials and drops zero coefficients.
  Poly(RingPtr ring, std::vector<Term> terms);

  static Poly constant(RingPtr ring, const Rational& c);
  static Poly variable(RingPtr ring, int index);
  static Poly monomial(RingPtr ring, const Monomial& m, const Rational& c = 1);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool isZero() const { return terms_.empty(); }
  bool isConstant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.isOne()); }
  Rational constantTerm() const;
  const Term& leading() const { return terms_.front(); }
  long totalDegree() const;
  // Largest ring-grading degree of a term; -1 for zero.
  long maxDegree() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Rational& c) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly pow(unsigned k) const;
  Poly mulMonomial(const Monomial& m, const Rational& c) const;

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // Content-free over the integers with positive leading coefficient.
  Poly normalized() const;
  // Divided by the leading coefficient.
  Poly monic() const;

  std::string str() const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

inline Poly operator*(const Rational& c, const Poly& p) { return p * c; }

// A polynomial map X -> S given by one source polynomial per target variable.
struct PolyMap {
  RingPtr source;
  RingPtr target;
  std::vector<Poly> components;

  PolyMap() = default;
  PolyMap(RingPtr source, RingPtr target, std::vector<Poly> components);
  int sourceArity() const { return source->arity(); }
  int targetArity() const { return target->arity(); }
};

Poly differentiate(const Poly& p, int varIndex);
Poly substitute_map(const Poly& p, const PolyMap& phi);
// Replaces variable i of p's ring by images[i]; images live in one ring.
Poly substitute(const Poly& p, const std::vector<Poly>& images, const RingPtr& target);
// Re-expresses p in another ring; varMap[i] is the index in `target` of
// variable i, or -1 if p must not involve it.
Poly change_ring(const Poly& p, const RingPtr& target, const std::vector<int>& varMap);
Rational evaluate(const Poly& p, const std::vector<Rational>& point);

struct WeightedDegree {
  bool homogeneous = true;
  long degree = 0;
  // Two terms of different weighted degree when not homogeneous.
  std::optional<std::pair<Poly, Poly>> witness;
};
WeightedDegree weighted_degree(const Poly& p, const std::vector<int>& weights);

std::optional<Poly> exact_divide(const Poly& p, const Poly& q);
Poly gcd(const Poly& p, const Poly& q);
Poly lcm(const Poly& p, const Poly& q);
Poly squarefree_part(const Poly& p);
bool is_squarefree(const Poly& p);
// Some c with p = c*q, if it exists (q nonzero or both zero).
std::optional<Rational> unit_multiple_eq(const Poly& p, const Poly& q);

std::string rational_str(const Rational& c);

}  // namespace freediv
