#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace freediv {

using Rational = mpq_class;
using Integer = mpz_class;

inline constexpr int kMaxVars = 32;

// Exponent vector with a support bitmask for quick divisibility rejection.
struct Monomial {
  std::array<uint16_t, kMaxVars> e{};
  uint32_t mask = 0;

  void refresh() {
    mask = 0;
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i]) mask |= (1u << i);
  }
  bool isOne() const { return mask == 0; }
  int totalDegree() const {
    int d = 0;
    for (int i = 0; i < kMaxVars; ++i) d += e[i];
    return d;
  }
  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator!=(const Monomial& o) const { return e != o.e; }

  bool divides(const Monomial& o) const {
    if (mask & ~o.mask) return false;
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = e[i] + o.e[i];
    r.mask = mask | o.mask;
    return r;
  }
  // Requires o | *this.
  Monomial operator/(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = e[i] - o.e[i];
    r.refresh();
    return r;
  }
  Monomial lcm(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = e[i] > o.e[i] ? e[i] : o.e[i];
    r.mask = mask | o.mask;
    return r;
  }
  bool coprime(const Monomial& o) const { return (mask & o.mask) == 0; }
  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (int i = 0; i < kMaxVars; ++i) h = (h ^ e[i]) * 1099511628211ull;
    return h;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

enum class OrderKind { GRevLex, Lex, Weighted, Block };

struct OrderSpec {
  OrderKind kind = OrderKind::GRevLex;
  // Block sizes for OrderKind::Block; each block is weighted-revlex.
  std::vector<int> blocks;
  bool operator==(const OrderSpec& o) const = default;
};

// Product of weighted degree-revlex blocks; covers every supported order.
class MonomialOrder {
 public:
  struct Block {
    int lo = 0;
    int hi = 0;
    std::vector<int> w;
    bool totalTiebreak = false;
  };
  MonomialOrder() = default;
  MonomialOrder(int nvars, const std::vector<int>& weights, const OrderSpec& spec);

  // Returns >0 if a > b, <0 if a < b, 0 if equal.
  int compare(const Monomial& a, const Monomial& b) const {
    for (const Block& bl : blocks_) {
      long da = 0, db = 0;
      for (int i = bl.lo; i < bl.hi; ++i) {
        da += long(bl.w[i - bl.lo]) * a.e[i];
        db += long(bl.w[i - bl.lo]) * b.e[i];
      }
      if (da != db) return da > db ? 1 : -1;
      if (bl.totalTiebreak) {
        long ta = 0, tb = 0;
        for (int i = bl.lo; i < bl.hi; ++i) {
          ta += a.e[i];
          tb += b.e[i];
        }
        if (ta != tb) return ta > tb ? 1 : -1;
      }
      for (int i = bl.hi - 1; i >= bl.lo; --i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    }
    return 0;
  }

 private:
  std::vector<Block> blocks_;
};

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

class PolyRing {
 public:
  PolyRing(std::vector<std::string> vars, std::vector<int> weights = {},
           OrderSpec order = {});

  static RingPtr make(std::vector<std::string> vars, std::vector<int> weights = {},
                      OrderSpec order = {});

  int arity() const { return int(vars_.size()); }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<int>& weights() const { return weights_; }
  const OrderSpec& orderSpec() const { return spec_; }
  const MonomialOrder& order() const { return order_; }
  int indexOf(const std::string& name) const;

  // True when every weight is positive, i.e. the grading is usable for
  // graded Nakayama arguments.
  bool positiveWeights() const;
  // Weights used for degree bookkeeping: declared if positive, else all one.
  const std::vector<int>& gradingWeights() const { return grading_; }
  long degree(const Monomial& m) const {
    long d = 0;
    for (int i = 0; i < arity(); ++i) d += long(grading_[i]) * m.e[i];
    return d;
  }
  long weightedDegree(const Monomial& m, const std::vector<int>& w) const {
    long d = 0;
    for (int i = 0; i < arity(); ++i) d += long(w[i]) * m.e[i];
    return d;
  }

  bool operator==(const PolyRing& o) const {
    return vars_ == o.vars_ && weights_ == o.weights_ && spec_ == o.spec_;
  }

  std::string str() const;

 private:
  std::vector<std::string> vars_;
  std::vector<int> weights_;
  std::vector<int> grading_;
  OrderSpec spec_;
  MonomialOrder order_;
};

bool same_ring(const RingPtr& a, const RingPtr& b);
void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where);

}  // namespace freediv
