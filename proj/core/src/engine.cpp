#include "engine.hpp"

#include <algorithm>
#include <string>

#include "freediv/error.hpp"

namespace freediv::detail {

Engine::Engine(EngineConfig cfg, const EngineOptions& opts) : cfg_(std::move(cfg)), opts_(opts) {
  if (cfg_.shifts.empty()) cfg_.shifts.assign(cfg_.ncomps, 0);
  byComp_.resize(cfg_.ncomps);
}

int Engine::cmp(const ETerm& a, const ETerm& b) const {
  bool ta = a.comp >= cfg_.split, tb = b.comp >= cfg_.split;
  if (ta != tb) return ta ? -1 : 1;
  if (cfg_.pot && a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
  int c = cfg_.ring->order().compare(a.m, b.m);
  if (c) return c;
  if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
  return 0;
}

void Engine::sortVec(EVec& v) const {
  std::sort(v.begin(), v.end(), [&](const ETerm& a, const ETerm& b) { return cmp(a, b) > 0; });
  EVec out;
  out.reserve(v.size());
  for (auto& t : v) {
    if (!out.empty() && out.back().comp == t.comp && out.back().m == t.m) {
      out.back().c += t.c;
      if (sgn(out.back().c) == 0) out.pop_back();
    } else if (sgn(t.c) != 0) {
      out.push_back(std::move(t));
    }
  }
  v = std::move(out);
}

long Engine::sugarOf(const EVec& v) const {
  long s = LONG_MIN;
  for (const auto& t : v) s = std::max(s, termDegree(t));
  return s == LONG_MIN ? 0 : s;
}

void Engine::tick() const {
  ++steps_;
  if (opts_.stats) ++opts_.stats->reductions;
  if (steps_ > opts_.budget)
    throw BudgetExceeded("step budget of " + std::to_string(opts_.budget) + " reductions exceeded");
  if ((steps_ & 255) == 0 && std::chrono::steady_clock::now() > opts_.deadline)
    throw BudgetExceeded("timeout exceeded");
}

void Engine::makePrimitive(EVec& v) const {
  if (v.empty()) return;
  Integer g = 0;
  for (const auto& t : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
    if (g == 1) break;
  }
  if (sgn(v[0].c) < 0) g = -g;
  if (g != 1)
    for (auto& t : v) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
}

// f <- b * f[fpos+1..] - a * q * g[1..]
void Engine::subMul(EVec& f, std::size_t fpos, const Integer& b, const Integer& a, const Monomial& q,
                    const EVec& g) const {
  EVec out;
  out.reserve(f.size() - fpos + g.size());
  std::size_t i = fpos + 1, j = 1;
  bool scaleF = b != 1;
  ETerm tg;
  while (i < f.size() || j < g.size()) {
    int c;
    if (j < g.size()) {
      tg.m = g[j].m * q;
      tg.comp = g[j].comp;
      c = i < f.size() ? cmp(f[i], tg) : -1;
    } else {
      c = 1;
    }
    if (c > 0) {
      out.push_back(std::move(f[i]));
      if (scaleF) out.back().c *= b;
      ++i;
    } else if (c < 0) {
      tg.c = g[j].c * a;
      tg.c = -tg.c;
      out.push_back(tg);
      ++j;
    } else {
      Integer v = scaleF ? Integer(f[i].c * b) : f[i].c;
      v -= g[j].c * a;
      if (sgn(v) != 0) out.push_back({f[i].m, f[i].comp, std::move(v)});
      ++i;
      ++j;
    }
  }
  f = std::move(out);
}

int Engine::findReducer(const ETerm& t) const {
  int best = -1;
  std::size_t bestLen = 0;
  for (int idx : byComp_[t.comp]) {
    const Elem& e = basis_[idx];
    if (e.v[0].m.divides(t.m)) {
      if (best < 0 || e.v.size() < bestLen) {
        best = idx;
        bestLen = e.v.size();
      }
    }
  }
  return best;
}

Integer Engine::reduce(EVec& f, bool full, bool reduceTracking) const {
  Integer scale = 1;
  EVec done;
  while (!f.empty()) {
    std::size_t pos = 0;
    // Skip over irreducible terms, moving them to `done`.
    int gi = -1;
    for (; pos < f.size(); ++pos) {
      const ETerm& t = f[pos];
      if (!reduceTracking && t.comp >= cfg_.split) {
        pos = f.size();
        break;
      }
      gi = findReducer(t);
      if (gi >= 0 || !full) break;
    }
    if (gi < 0) break;
    // Terms before pos are final.
    for (std::size_t k = 0; k < pos; ++k) done.push_back(std::move(f[k]));
    const EVec& g = basis_[gi].v;
    Integer a = f[pos].c, b = g[0].c;
    Integer d;
    mpz_gcd(d.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (d != 1) {
      mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
      mpz_divexact(b.get_mpz_t(), b.get_mpz_t(), d.get_mpz_t());
    }
    Monomial q = f[pos].m / g[0].m;
    subMul(f, pos, b, a, q, g);
    if (b != 1) {
      for (auto& t : done) t.c *= b;
      scale *= b;
    }
    tick();
  }
  if (!done.empty()) {
    for (auto& t : f) done.push_back(std::move(t));
    f = std::move(done);
  }
  return scale;
}

bool Engine::itemLess(const Item& a, const Item& b) const {
  if (a.sugar != b.sugar) return a.sugar < b.sugar;
  bool ia = a.j < 0, ib = b.j < 0;
  if (ia != ib) return ia;
  if (a.lcmDeg != b.lcmDeg) return a.lcmDeg < b.lcmDeg;
  if (a.j != b.j) return a.j < b.j;
  return a.i < b.i;
}

void Engine::addGenerator(EVec v) {
  sortVec(v);
  if (v.empty()) return;
  Item it;
  it.sugar = sugarOf(v);
  it.lcmDeg = termDegree(v[0]);
  it.i = int(inputs_.size());
  it.j = -1;
  inputs_.push_back(std::move(v));
  queue_.push_back(std::move(it));
}

EVec Engine::spoly(int i, int j) const {
  const EVec& f = basis_[i].v;
  const EVec& g = basis_[j].v;
  Monomial L = f[0].m.lcm(g[0].m);
  Integer a = f[0].c, b = g[0].c, d;
  mpz_gcd(d.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
  mpz_divexact(b.get_mpz_t(), b.get_mpz_t(), d.get_mpz_t());
  // b * (L/lm f) * f - a * (L/lm g) * g, leading terms cancel.
  Monomial qf = L / f[0].m, qg = L / g[0].m;
  EVec s;
  s.reserve(f.size() + g.size());
  s.push_back({L, f[0].comp, 0});
  for (std::size_t k = 1; k < f.size(); ++k) s.push_back({f[k].m * qf, f[k].comp, f[k].c * b});
  subMul(s, 0, 1, a, qg, g);
  return s;
}

void Engine::insert(EVec h, long sugar) {
  int k = int(basis_.size());
  basis_.push_back({std::move(h), sugar, false});
  const EVec& hv = basis_[k].v;
  int comp = hv[0].comp;
  bool tracking = comp >= cfg_.split;
  if (tracking && !cfg_.trackingPairs) {
    byComp_[comp].push_back(k);
    return;
  }
  const Monomial& lh = hv[0].m;
  bool product = cfg_.ncomps == 1;

  // Old pairs (Gebauer-Moeller B criterion).
  for (Item& it : queue_) {
    if (!it.alive || it.j < 0) continue;
    if (basis_[it.i].v[0].comp != comp) continue;
    if (!lh.divides(it.lcm)) continue;
    Monomial li = basis_[it.i].v[0].m.lcm(lh), lj = basis_[it.j].v[0].m.lcm(lh);
    if (li != it.lcm && lj != it.lcm) it.alive = false;
  }
  queue_.erase(std::remove_if(queue_.begin(), queue_.end(), [](const Item& it) { return !it.alive; }),
               queue_.end());

  // New pairs.
  struct Cand {
    int i;
    Monomial lcm;
    bool coprime;
    bool keep = true;
  };
  std::vector<Cand> C;
  for (int i : byComp_[comp]) {
    const Monomial& li = basis_[i].v[0].m;
    C.push_back({i, li.lcm(lh), product && li.coprime(lh)});
  }
  // M criterion: drop if another lcm strictly divides.
  for (auto& c : C) {
    for (const auto& o : C) {
      if (&o == &c) continue;
      if (o.lcm != c.lcm && o.lcm.divides(c.lcm)) {
        c.keep = false;
        break;
      }
    }
  }
  // F criterion: among equal lcms keep one; if any is coprime drop all.
  for (std::size_t a = 0; a < C.size(); ++a) {
    if (!C[a].keep) continue;
    bool anyCoprime = C[a].coprime;
    for (std::size_t b = a + 1; b < C.size(); ++b)
      if (C[b].keep && C[b].lcm == C[a].lcm) {
        anyCoprime = anyCoprime || C[b].coprime;
        C[b].keep = false;
      }
    if (anyCoprime) C[a].keep = false;
  }
  for (const auto& c : C) {
    if (!c.keep) continue;
    Item it;
    const Elem& ei = basis_[c.i];
    long di = cfg_.ring->degree(c.lcm) - cfg_.ring->degree(ei.v[0].m);
    long dk = cfg_.ring->degree(c.lcm) - cfg_.ring->degree(lh);
    it.sugar = std::max(ei.sugar + di, sugar + dk);
    it.lcmDeg = cfg_.ring->degree(c.lcm) + cfg_.shifts[comp];
    it.i = c.i;
    it.j = k;
    it.lcm = c.lcm;
    queue_.push_back(std::move(it));
  }

  // Elements whose leading monomial is divisible by lh become redundant.
  auto& list = byComp_[comp];
  list.erase(std::remove_if(list.begin(), list.end(),
                            [&](int i) {
                              if (lh.divides(basis_[i].v[0].m)) {
                                basis_[i].redundant = true;
                                return true;
                              }
                              return false;
                            }),
             list.end());
  list.push_back(k);
}

void Engine::run(long degreeLimit) {
  while (true) {
    int best = -1;
    for (int q = 0; q < int(queue_.size()); ++q) {
      if (queue_[q].sugar > degreeLimit) continue;
      if (best < 0 || itemLess(queue_[q], queue_[best])) best = q;
    }
    if (best < 0) break;
    Item it = std::move(queue_[best]);
    queue_[best] = std::move(queue_.back());
    queue_.pop_back();
    EVec v;
    if (it.j < 0) {
      v = std::move(inputs_[it.i]);
    } else {
      v = spoly(it.i, it.j);
      ++spairs_;
      if (opts_.stats) ++opts_.stats->spairs;
    }
    reduce(v, true, false);
    if (v.empty()) {
      ++zeroReductions_;
      continue;
    }
    makePrimitive(v);
    insert(std::move(v), it.sugar);
  }
}

std::vector<EVec> Engine::reducedBasis() const {
  std::vector<EVec> out;
  std::vector<int> idx;
  for (int c = 0; c < cfg_.split && c < cfg_.ncomps; ++c)
    for (int i : byComp_[c]) idx.push_back(i);
  std::sort(idx.begin(), idx.end(),
            [&](int a, int b) { return cmp(basis_[a].v[0], basis_[b].v[0]) < 0; });
  for (int i : idx) {
    EVec v = basis_[i].v;
    ETerm head = v[0];
    EVec tail(std::make_move_iterator(v.begin() + 1), std::make_move_iterator(v.end()));
    Integer s = reduce(tail, true, false);
    head.c *= s;
    EVec r;
    r.reserve(tail.size() + 1);
    r.push_back(std::move(head));
    for (auto& t : tail) r.push_back(std::move(t));
    makePrimitive(r);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<EVec> Engine::trackingElements() const {
  std::vector<EVec> out;
  for (int c = cfg_.split; c < cfg_.ncomps; ++c)
    for (int i : byComp_[c]) out.push_back(basis_[i].v);
  return out;
}

bool Engine::selfCheck() const {
  std::vector<int> idx;
  for (int c = 0; c < cfg_.split && c < cfg_.ncomps; ++c)
    for (int i : byComp_[c]) idx.push_back(i);
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b) {
      if (basis_[idx[a]].v[0].comp != basis_[idx[b]].v[0].comp) continue;
      EVec s = spoly(idx[a], idx[b]);
      reduce(s, false, false);
      if (!s.empty() && s[0].comp < cfg_.split) return false;
    }
  return true;
}

EVec to_evec(const Engine& eng, const std::vector<Poly>& col, int offset, int trackComp,
             Integer* denOut) {
  Integer den = 1;
  for (const auto& p : col)
    for (const auto& t : p.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.c.get_den_mpz_t());
  EVec v;
  for (int r = 0; r < int(col.size()); ++r)
    for (const auto& t : col[r].terms()) {
      Integer c = t.c.get_num() * (den / t.c.get_den());
      v.push_back({t.m, offset + r, std::move(c)});
    }
  if (trackComp >= 0) v.push_back({Monomial{}, trackComp, den});
  if (denOut) *denOut = den;
  eng.sortVec(v);
  return v;
}

std::vector<Poly> from_evec(const EVec& v, const RingPtr& ring, int lo, int hi) {
  std::vector<std::vector<Poly::Term>> parts(hi - lo);
  for (const auto& t : v)
    if (t.comp >= lo && t.comp < hi) parts[t.comp - lo].push_back({t.m, Rational(t.c)});
  std::vector<Poly> out;
  out.reserve(hi - lo);
  for (auto& p : parts) out.emplace_back(ring, std::move(p));
  return out;
}

}  // namespace freediv::detail
