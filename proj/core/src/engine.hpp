#pragma once

#include <climits>
#include <vector>

#include "freediv/groebner.hpp"
#include "freediv/ring.hpp"

namespace freediv::detail {

struct ETerm {
  Monomial m;
  int comp;
  Integer c;
};
using EVec = std::vector<ETerm>;

struct EngineConfig {
  const PolyRing* ring = nullptr;
  int ncomps = 1;
  // Components >= split are tracking coordinates, ordered below all others.
  int split = 1;
  // Degree shift of each component.
  std::vector<long> shifts;
  bool pot = false;
  // Form S-pairs between elements whose leading term is a tracking term.
  bool trackingPairs = false;
};

// Fraction-free Buchberger over Z-primitive vectors.
class Engine {
 public:
  Engine(EngineConfig cfg, const EngineOptions& opts);

  int cmp(const ETerm& a, const ETerm& b) const;
  void sortVec(EVec& v) const;
  long termDegree(const ETerm& t) const { return cfg_.ring->degree(t.m) + cfg_.shifts[t.comp]; }
  long sugarOf(const EVec& v) const;

  void addGenerator(EVec v);
  void run(long degreeLimit = LONG_MAX);

  // Reduces v in place. With full=false only leading terms are reduced.
  // Reduction never touches tracking terms unless reduceTracking is set.
  // Returns the integer factor by which the original vector was scaled.
  Integer reduce(EVec& v, bool full, bool reduceTracking = false) const;

  // Basis elements with leading term in a non-tracking component, interreduced,
  // primitive and sorted by ascending leading term.
  std::vector<EVec> reducedBasis() const;
  // Elements whose leading term lies in a tracking component.
  std::vector<EVec> trackingElements() const;
  // Every S-pair among non-tracking elements reduces to zero.
  bool selfCheck() const;

  const EngineConfig& config() const { return cfg_; }
  long reductions() const { return steps_; }
  long spairs() const { return spairs_; }

 private:
  struct Elem {
    EVec v;
    long sugar;
    bool redundant = false;
  };
  struct Item {
    long sugar;
    long lcmDeg;
    int i;
    int j;  // -1 for an input generator with index i
    Monomial lcm;
    bool alive = true;
  };

  bool itemLess(const Item& a, const Item& b) const;
  void insert(EVec h, long sugar);
  EVec spoly(int i, int j) const;
  int findReducer(const ETerm& t) const;
  void tick() const;
  void makePrimitive(EVec& v) const;
  void subMul(EVec& f, std::size_t fpos, const Integer& b, const Integer& a, const Monomial& q,
              const EVec& g) const;

  EngineConfig cfg_;
  EngineOptions opts_;
  std::vector<Elem> basis_;
  std::vector<std::vector<int>> byComp_;
  std::vector<EVec> inputs_;
  std::vector<Item> queue_;
  mutable long steps_ = 0;
  mutable long spairs_ = 0;
  mutable long zeroReductions_ = 0;
};

// Column with denominators cleared into an engine vector. Row i goes to
// component offset+i. If trackComp >= 0, a tracking unit e_trackComp scaled
// by the same factor is appended.
EVec to_evec(const Engine& eng, const std::vector<Poly>& col, int offset, int trackComp = -1,
             Integer* denOut = nullptr);
// Components [lo, hi) as a list of polynomials.
std::vector<Poly> from_evec(const EVec& v, const RingPtr& ring, int lo, int hi);

}  // namespace freediv::detail
