#include "freediv/poly.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "freediv/error.hpp"
#include "freediv/groebner.hpp"

namespace freediv {

namespace {

void sortAndMerge(const RingPtr& ring, std::vector<Poly::Term>& ts) {
  const MonomialOrder& ord = ring->order();
  std::sort(ts.begin(), ts.end(),
            [&](const Poly::Term& a, const Poly::Term& b) { return ord.compare(a.m, b.m) > 0; });
  std::vector<Poly::Term> out;
  out.reserve(ts.size());
  for (auto& t : ts) {
    if (!out.empty() && out.back().m == t.m) {
      out.back().c += t.c;
    } else {
      if (!out.empty() && sgn(out.back().c) == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && sgn(out.back().c) == 0) out.pop_back();
  ts = std::move(out);
}

Poly addScaled(const Poly& a, const Poly& b, int sign) {
  const MonomialOrder& ord = a.ring()->order();
  std::vector<Poly::Term> out;
  out.reserve(a.size() + b.size());
  auto ia = a.terms().begin(), ea = a.terms().end();
  auto ib = b.terms().begin(), eb = b.terms().end();
  while (ia != ea || ib != eb) {
    int c = ia == ea ? -1 : ib == eb ? 1 : ord.compare(ia->m, ib->m);
    if (c > 0) {
      out.push_back(*ia++);
    } else if (c < 0) {
      out.push_back({ib->m, sign > 0 ? Rational(ib->c) : Rational(-ib->c)});
      ++ib;
    } else {
      Rational s = sign > 0 ? Rational(ia->c + ib->c) : Rational(ia->c - ib->c);
      if (sgn(s) != 0) out.push_back({ia->m, s});
      ++ia;
      ++ib;
    }
  }
  return Poly(a.ring(), std::move(out));
}

}  // namespace

Poly::Poly(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
  bool sorted = true;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (sgn(terms_[i].c) == 0) {
      sorted = false;
      break;
    }
    if (i && ring_->order().compare(terms_[i - 1].m, terms_[i].m) <= 0) {
      sorted = false;
      break;
    }
  }
  if (!sorted) sortAndMerge(ring_, terms_);
}

Poly Poly::constant(RingPtr ring, const Rational& c) {
  Poly p(std::move(ring));
  if (sgn(c) != 0) p.terms_.push_back({Monomial{}, c});
  return p;
}

Poly Poly::variable(RingPtr ring, int index) {
  if (index < 0 || index >= ring->arity()) throw Error("variable index out of range");
  Monomial m;
  m.e[index] = 1;
  m.refresh();
  return monomial(std::move(ring), m, 1);
}

Poly Poly::monomial(RingPtr ring, const Monomial& m, const Rational& c) {
  Poly p(std::move(ring));
  if (sgn(c) != 0) p.terms_.push_back({m, c});
  return p;
}

Rational Poly::constantTerm() const {
  if (!terms_.empty() && terms_.back().m.isOne()) return terms_.back().c;
  return 0;
}

long Poly::totalDegree() const {
  long d = -1;
  for (const auto& t : terms_) d = std::max<long>(d, t.m.totalDegree());
  return d;
}

long Poly::maxDegree() const {
  long d = -1;
  for (const auto& t : terms_) d = std::max(d, ring_->degree(t.m));
  return d;
}

Poly Poly::operator+(const Poly& o) const {
  if (o.isZero()) return *this;
  if (isZero()) return o;
  require_same_ring(ring_, o.ring_, "addition");
  return addScaled(*this, o, 1);
}

Poly Poly::operator-(const Poly& o) const {
  if (o.isZero()) return *this;
  if (isZero()) return -o;
  require_same_ring(ring_, o.ring_, "subtraction");
  return addScaled(*this, o, -1);
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.c = -t.c;
  return r;
}

Poly Poly::operator*(const Rational& c) const {
  if (sgn(c) == 0) return Poly(ring_);
  Poly r = *this;
  for (auto& t : r.terms_) t.c *= c;
  return r;
}

Poly Poly::mulMonomial(const Monomial& m, const Rational& c) const {
  if (sgn(c) == 0) return Poly(ring_);
  Poly r = *this;
  for (auto& t : r.terms_) {
    t.m = t.m * m;
    t.c *= c;
  }
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  if (isZero() || o.isZero()) return Poly(ring_ ? ring_ : o.ring_);
  require_same_ring(ring_, o.ring_, "multiplication");
  if (o.size() == 1) return mulMonomial(o.terms_[0].m, o.terms_[0].c);
  if (size() == 1) return o.mulMonomial(terms_[0].m, terms_[0].c);
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(size() * o.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) {
      auto [it, fresh] = acc.try_emplace(a.m * b.m, a.c * b.c);
      if (!fresh) it->second += a.c * b.c;
    }
  std::vector<Term> ts;
  ts.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (sgn(c) != 0) ts.push_back({m, c});
  const MonomialOrder& ord = ring_->order();
  std::sort(ts.begin(), ts.end(), [&](const Term& a, const Term& b) { return ord.compare(a.m, b.m) > 0; });
  Poly r(ring_);
  r.terms_ = std::move(ts);
  return r;
}

Poly Poly::pow(unsigned k) const {
  Poly result = constant(ring_, 1);
  Poly base = *this;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

bool Poly::operator==(const Poly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  if (!terms_.empty() && !same_ring(ring_, o.ring_)) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].m != o.terms_[i].m || terms_[i].c != o.terms_[i].c) return false;
  return true;
}

Poly Poly::normalized() const {
  if (isZero()) return *this;
  Integer num = 0, den = 1;
  for (const auto& t : terms_) {
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.c.get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.c.get_den_mpz_t());
  }
  Rational scale(den, num);
  scale.canonicalize();
  if (sgn(terms_[0].c) < 0) scale = -scale;
  return *this * scale;
}

Poly Poly::monic() const {
  if (isZero()) return *this;
  return *this * Rational(1 / terms_[0].c);
}

std::string rational_str(const Rational& c) {
  return c.get_str();
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.c;
    bool neg = sgn(c) < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? "-" : "+");
    }
    first = false;
    bool unit = c == 1;
    if (!unit || t.m.isOne()) {
      os << rational_str(c);
      if (!t.m.isOne()) os << "*";
    }
    bool firstVar = true;
    for (int i = 0; i < ring_->arity(); ++i) {
      if (!t.m.e[i]) continue;
      if (!firstVar) os << "*";
      firstVar = false;
      os << ring_->vars()[i];
      if (t.m.e[i] > 1) os << "^" << t.m.e[i];
    }
  }
  return os.str();
}

PolyMap::PolyMap(RingPtr source, RingPtr target, std::vector<Poly> components)
    : source(std::move(source)), target(std::move(target)), components(std::move(components)) {
  if (int(this->components.size()) != this->target->arity())
    throw Error("map component count differs from target arity");
  for (auto& c : this->components) {
    if (c.isZero() && !c.ring()) c = Poly(this->source);
    if (c.ring() && !same_ring(c.ring(), this->source)) throw RingMismatch("map component not in source ring");
    if (!c.ring()) c = Poly(this->source);
  }
}

Poly differentiate(const Poly& p, int varIndex) {
  if (!p.ring()) return p;
  if (varIndex < 0 || varIndex >= p.ring()->arity()) throw Error("differentiate: variable index out of range");
  std::vector<Poly::Term> ts;
  for (const auto& t : p.terms()) {
    unsigned k = t.m.e[varIndex];
    if (!k) continue;
    Monomial m = t.m;
    m.e[varIndex] = k - 1;
    m.refresh();
    ts.push_back({m, t.c * k});
  }
  return Poly(p.ring(), std::move(ts));
}

Poly substitute(const Poly& p, const std::vector<Poly>& images, const RingPtr& target) {
  if (p.ring() && int(images.size()) != p.ring()->arity()) throw Error("substitute: wrong image count");
  Poly result(target);
  if (p.isZero()) return result;
  int n = p.ring()->arity();
  std::vector<std::vector<Poly>> powers(n);
  auto power = [&](int i, unsigned k) -> const Poly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Poly::constant(target, 1));
    while (cache.size() <= k) cache.push_back(cache.back() * images[i]);
    return cache[k];
  };
  std::vector<Poly::Term> acc;
  std::unordered_map<Monomial, Rational, MonomialHash> sum;
  for (const auto& t : p.terms()) {
    Poly term = Poly::constant(target, t.c);
    for (int i = 0; i < n && !term.isZero(); ++i)
      if (t.m.e[i]) term = term * power(i, t.m.e[i]);
    for (const auto& s : term.terms()) {
      auto [it, fresh] = sum.try_emplace(s.m, s.c);
      if (!fresh) it->second += s.c;
    }
  }
  for (auto& [m, c] : sum)
    if (sgn(c) != 0) acc.push_back({m, c});
  return Poly(target, std::move(acc));
}

Poly substitute_map(const Poly& p, const PolyMap& phi) {
  if (p.ring() && !same_ring(p.ring(), phi.target))
    throw RingMismatch("substitute_map: polynomial is not on the target ring");
  return substitute(p, phi.components, phi.source);
}

Poly change_ring(const Poly& p, const RingPtr& target, const std::vector<int>& varMap) {
  std::vector<Poly::Term> ts;
  ts.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m;
    for (int i = 0; i < p.ring()->arity(); ++i) {
      if (!t.m.e[i]) continue;
      if (varMap[i] < 0) throw Error("change_ring: variable not present in target ring");
      m.e[varMap[i]] += t.m.e[i];
    }
    m.refresh();
    ts.push_back({m, t.c});
  }
  return Poly(target, std::move(ts));
}

Rational evaluate(const Poly& p, const std::vector<Rational>& point) {
  Rational s = 0;
  for (const auto& t : p.terms()) {
    Rational v = t.c;
    for (int i = 0; i < p.ring()->arity(); ++i)
      for (unsigned k = 0; k < t.m.e[i]; ++k) v *= point[i];
    s += v;
  }
  return s;
}

WeightedDegree weighted_degree(const Poly& p, const std::vector<int>& weights) {
  if (p.ring() && int(weights.size()) != p.ring()->arity())
    throw Error("weighted_degree: weights length differs from arity");
  if (std::all_of(weights.begin(), weights.end(), [](int w) { return w == 0; }) && !weights.empty())
    throw Error("weighted_degree: all weights are zero");
  WeightedDegree r;
  if (p.isZero()) return r;
  r.degree = p.ring()->weightedDegree(p.terms()[0].m, weights);
  for (const auto& t : p.terms()) {
    long d = p.ring()->weightedDegree(t.m, weights);
    if (d != r.degree) {
      r.homogeneous = false;
      r.witness = std::make_pair(Poly::monomial(p.ring(), p.terms()[0].m, p.terms()[0].c),
                                 Poly::monomial(p.ring(), t.m, t.c));
      return r;
    }
  }
  return r;
}

std::optional<Poly> exact_divide(const Poly& p, const Poly& q) {
  if (q.isZero()) throw Error("division by zero polynomial");
  Poly rem = p;
  std::vector<Poly::Term> quot;
  const auto& lq = q.leading();
  while (!rem.isZero()) {
    const auto& lr = rem.leading();
    if (!lq.m.divides(lr.m)) return std::nullopt;
    Monomial m = lr.m / lq.m;
    Rational c = lr.c / lq.c;
    quot.push_back({m, c});
    rem = rem - q.mulMonomial(m, c);
  }
  return Poly(q.ring(), std::move(quot));
}

Poly lcm(const Poly& p, const Poly& q) {
  require_same_ring(p.ring(), q.ring(), "lcm");
  if (p.isZero() || q.isZero()) return Poly(p.ring());
  if (p.isConstant()) return q.normalized();
  if (q.isConstant()) return p.normalized();
  // (p) ∩ (q) = ((t*p, (1-t)*q) eliminate t).
  const RingPtr& R = p.ring();
  int n = R->arity();
  std::vector<std::string> vars{"@t"};
  std::vector<int> weights{1};
  for (int i = 0; i < n; ++i) {
    vars.push_back(R->vars()[i]);
    weights.push_back(R->gradingWeights()[i]);
  }
  RingPtr T = PolyRing::make(vars, weights, OrderSpec{OrderKind::Block, {1, n}});
  std::vector<int> into(n);
  for (int i = 0; i < n; ++i) into[i] = i + 1;
  Poly t = Poly::variable(T, 0);
  Poly one = Poly::constant(T, 1);
  ModulePresentation M(T, 1, {{t * change_ring(p, T, into)}, {(one - t) * change_ring(q, T, into)}});
  ModulePresentation E = eliminate(M, {0});
  Poly best(T);
  for (const auto& col : E.columns())
    if (!col[0].isZero() && (best.isZero() || col[0].maxDegree() < best.maxDegree() ||
                             (col[0].maxDegree() == best.maxDegree() && col[0].size() < best.size())))
      best = col[0];
  std::vector<int> back(n + 1, -1);
  for (int i = 0; i < n; ++i) back[i + 1] = i;
  return change_ring(best, R, back).normalized();
}

Poly gcd(const Poly& p, const Poly& q) {
  if (p.isZero()) return q.normalized();
  if (q.isZero()) return p.normalized();
  require_same_ring(p.ring(), q.ring(), "gcd");
  if (p.isConstant() || q.isConstant()) return Poly::constant(p.ring(), 1);
  Poly l = lcm(p, q);
  auto g = exact_divide(p * q, l);
  if (!g) throw Error("gcd: lcm does not divide the product");
  return g->normalized();
}

Poly squarefree_part(const Poly& p) {
  if (p.isZero()) throw Error("squarefree_part of zero polynomial");
  if (p.isConstant()) return Poly::constant(p.ring(), 1);
  Poly g = p;
  for (int i = 0; i < p.ring()->arity(); ++i) {
    Poly d = differentiate(p, i);
    if (d.isZero()) continue;
    g = gcd(g, d);
    if (g.isConstant()) break;
  }
  auto r = exact_divide(p, g);
  if (!r) throw Error("squarefree_part: gcd does not divide input");
  return r->normalized();
}

bool is_squarefree(const Poly& p) {
  if (p.isZero()) return false;
  return unit_multiple_eq(squarefree_part(p), p).has_value();
}

std::optional<Rational> unit_multiple_eq(const Poly& p, const Poly& q) {
  if (p.isZero() && q.isZero()) return Rational(1);
  if (p.isZero() || q.isZero() || p.size() != q.size()) return std::nullopt;
  if (!same_ring(p.ring(), q.ring())) return std::nullopt;
  Rational c = p.terms()[0].c / q.terms()[0].c;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.terms()[i].m != q.terms()[i].m) return std::nullopt;
    if (p.terms()[i].c != c * q.terms()[i].c) return std::nullopt;
  }
  return c;
}

}  // namespace freediv
