#include "freediv/groebner.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <numeric>
#include <sstream>

#include "engine.hpp"
#include "freediv/error.hpp"

namespace freediv {

using detail::Engine;
using detail::EngineConfig;
using detail::EVec;

EngineOptions EngineOptions::withTimeout(double seconds, long budget) {
  EngineOptions o;
  o.budget = budget;
  if (seconds > 0)
    o.deadline = std::chrono::steady_clock::now() +
                 std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                     std::chrono::duration<double>(seconds));
  return o;
}

// ---------------------------------------------------------------------------
// ModulePresentation

ModulePresentation::ModulePresentation(RingPtr ring, int rank, std::vector<std::vector<Poly>> columns,
                                       std::vector<int> rowDegrees)
    : ring_(std::move(ring)), rank_(rank), columns_(std::move(columns)), rowDegrees_(std::move(rowDegrees)) {
  if (rowDegrees_.empty()) rowDegrees_.assign(rank_, 0);
  if (int(rowDegrees_.size()) != rank_) throw Error("row degree count differs from rank");
  for (auto& col : columns_) {
    if (int(col.size()) != rank_) throw Error("column length differs from rank");
    for (auto& p : col) {
      if (!p.ring()) p = Poly(ring_);
      else if (!same_ring(p.ring(), ring_)) throw RingMismatch("module entry not in the module's ring");
    }
  }
}

ModulePresentation ModulePresentation::fromRows(RingPtr ring, const std::vector<std::vector<Poly>>& rows,
                                                std::vector<int> rowDegrees) {
  int r = int(rows.size());
  int c = r ? int(rows[0].size()) : 0;
  std::vector<std::vector<Poly>> cols(c, std::vector<Poly>(r, Poly(ring)));
  for (int i = 0; i < r; ++i) {
    if (int(rows[i].size()) != c) throw Error("ragged matrix");
    for (int j = 0; j < c; ++j) cols[j][i] = rows[i][j];
  }
  return ModulePresentation(ring, r, std::move(cols), std::move(rowDegrees));
}

ModulePresentation ModulePresentation::ideal(RingPtr ring, std::vector<Poly> gens) {
  std::vector<std::vector<Poly>> cols;
  for (auto& g : gens) cols.push_back({std::move(g)});
  return ModulePresentation(ring, 1, std::move(cols));
}

ModulePresentation ModulePresentation::identity(RingPtr ring, int n) {
  std::vector<std::vector<Poly>> cols(n, std::vector<Poly>(n, Poly(ring)));
  for (int i = 0; i < n; ++i) cols[i][i] = Poly::constant(ring, 1);
  return ModulePresentation(ring, n, std::move(cols));
}

std::vector<std::vector<Poly>> ModulePresentation::rows() const {
  std::vector<std::vector<Poly>> r(rank_, std::vector<Poly>(columns_.size(), Poly(ring_)));
  for (std::size_t j = 0; j < columns_.size(); ++j)
    for (int i = 0; i < rank_; ++i) r[i][j] = columns_[j][i];
  return r;
}

std::optional<std::vector<int>> ModulePresentation::columnDegrees() const {
  if (!ring_ || !ring_->positiveWeights()) return std::nullopt;
  std::vector<int> out;
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    const auto& col = columns_[j];
    std::optional<long> deg;
    if (j < declaredColDegrees_.size()) deg = declaredColDegrees_[j];
    for (int i = 0; i < rank_; ++i) {
      for (const auto& t : col[i].terms()) {
        long d = ring_->degree(t.m) + rowDegrees_[i];
        if (!deg) deg = d;
        else if (*deg != d) return std::nullopt;
      }
    }
    out.push_back(int(deg.value_or(0)));
  }
  return out;
}

bool ModulePresentation::isZero() const {
  for (const auto& col : columns_)
    for (const auto& p : col)
      if (!p.isZero()) return false;
  return true;
}

ModulePresentation ModulePresentation::withRowDegrees(std::vector<int> d) const {
  return ModulePresentation(ring_, rank_, columns_, std::move(d));
}

ModulePresentation ModulePresentation::withColumnDegrees(std::vector<int> d) const {
  ModulePresentation M(ring_, rank_, columns_, rowDegrees_);
  M.declaredColDegrees_ = std::move(d);
  return M;
}

ModulePresentation ModulePresentation::withColumns(std::vector<std::vector<Poly>> cols) const {
  return ModulePresentation(ring_, rank_, std::move(cols), rowDegrees_);
}

ModulePresentation ModulePresentation::concat(const ModulePresentation& other) const {
  if (other.rank_ != rank_) throw Error("concat: rank mismatch");
  if (!other.columns_.empty()) require_same_ring(ring_, other.ring_, "concat");
  auto cols = columns_;
  cols.insert(cols.end(), other.columns_.begin(), other.columns_.end());
  ModulePresentation C = withColumns(std::move(cols));
  if (!declaredColDegrees_.empty() || !other.declaredColDegrees_.empty()) {
    auto a = columnDegrees(), b = other.columnDegrees();
    if (a && b) {
      a->insert(a->end(), b->begin(), b->end());
      C.declaredColDegrees_ = *a;
    }
  }
  return C;
}

ModulePresentation ModulePresentation::compact() const {
  std::vector<std::vector<Poly>> cols;
  for (const auto& col : columns_)
    if (std::any_of(col.begin(), col.end(), [](const Poly& p) { return !p.isZero(); })) cols.push_back(col);
  return withColumns(std::move(cols));
}

std::shared_ptr<const GroebnerBasis> ModulePresentation::groebner(const EngineOptions& opts) const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (!cache_->gb) cache_->gb = std::make_shared<const GroebnerBasis>(buchberger(*this, opts));
  return cache_->gb;
}

std::string ModulePresentation::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rank_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < columns_.size(); ++j) os << (j ? ", " : "") << columns_[j][i].str();
  }
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------------------
// Groebner bases

namespace {

std::vector<long> toLong(const std::vector<int>& v) { return std::vector<long>(v.begin(), v.end()); }

EngineConfig plainConfig(const ModulePresentation& M) {
  EngineConfig cfg;
  cfg.ring = M.ring().get();
  cfg.ncomps = std::max(1, M.rank());
  cfg.split = cfg.ncomps;
  cfg.shifts = toLong(M.rowDegrees());
  cfg.shifts.resize(cfg.ncomps, 0);
  return cfg;
}

// Degree shift for a generator used as a tracking component.
std::vector<long> trackingShifts(const ModulePresentation& M) {
  std::vector<long> out;
  auto cd = M.columnDegrees();
  for (int j = 0; j < M.numColumns(); ++j) {
    if (cd) {
      out.push_back((*cd)[j]);
    } else {
      long s = 0;
      bool any = false;
      for (int i = 0; i < M.rank(); ++i)
        for (const auto& t : M.entry(i, j).terms()) {
          long d = M.ring()->degree(t.m) + M.rowDegrees()[i];
          s = any ? std::max(s, d) : d;
          any = true;
        }
      out.push_back(s);
    }
  }
  return out;
}

void addStats(const Engine& eng, EngineStats& s) {
  s.spairs += eng.spairs();
  s.reductions += eng.reductions();
}

}  // namespace

GroebnerBasis buchberger(const ModulePresentation& M, const EngineOptions& opts) {
  auto eng = std::make_shared<Engine>(plainConfig(M), opts);
  for (const auto& col : M.columns()) eng->addGenerator(detail::to_evec(*eng, col, 0));
  eng->run();
  GroebnerBasis G;
  G.ring = M.ring();
  G.rank = M.rank();
  G.rowDegrees = M.rowDegrees();
  for (const auto& v : eng->reducedBasis()) G.generators.push_back(detail::from_evec(v, M.ring(), 0, M.rank()));
  addStats(*eng, G.stats);
  G.engine = eng;
  return G;
}

bool GroebnerBasis::selfCheck() const {
  // Rebuild from the reduced generators and verify all S-pairs.
  ModulePresentation M(ring, rank, generators, rowDegrees);
  Engine eng(plainConfig(M), EngineOptions{});
  for (const auto& col : generators) eng.addGenerator(detail::to_evec(eng, col, 0));
  eng.run();
  if (!eng.selfCheck()) return false;
  // The generators must already be a basis: each new leading term is one of ours.
  auto lt = leadingTerms();
  for (const auto& v : eng.reducedBasis()) {
    bool found = false;
    for (const auto& [c, m] : lt)
      if (c == v[0].comp && m == v[0].m) found = true;
    if (!found) return false;
  }
  return true;
}

std::vector<std::pair<int, Monomial>> GroebnerBasis::leadingTerms() const {
  std::vector<std::pair<int, Monomial>> out;
  for (const auto& v : engine->reducedBasis()) out.emplace_back(v[0].comp, v[0].m);
  return out;
}

std::vector<Poly> normal_form(const std::vector<Poly>& v, const GroebnerBasis& G) {
  if (int(v.size()) != G.rank) throw Error("normal_form: rank mismatch");
  for (const auto& p : v)
    if (!p.isZero()) require_same_ring(p.ring(), G.ring, "normal_form");
  Integer den;
  EVec e = detail::to_evec(*G.engine, v, 0, -1, &den);
  Integer s = G.engine->reduce(e, true, false);
  auto out = detail::from_evec(e, G.ring, 0, G.rank);
  Rational f(1, 1);
  f = Rational(Integer(1), Integer(s * den));
  f.canonicalize();
  for (auto& p : out) p = p * f;
  return out;
}

bool in_span(const std::vector<Poly>& v, const GroebnerBasis& G) {
  Integer den;
  EVec e = detail::to_evec(*G.engine, v, 0, -1, &den);
  G.engine->reduce(e, false, false);
  return e.empty();
}

// ---------------------------------------------------------------------------
// Syzygies, elimination, kernels

namespace {

// Raw syzygy generators (not trimmed) with row degrees of the syzygy module.
ModulePresentation rawSyzygies(const ModulePresentation& M, const EngineOptions& opts) {
  int r = M.rank(), k = M.numColumns();
  EngineConfig cfg;
  cfg.ring = M.ring().get();
  cfg.ncomps = r + k;
  cfg.split = r;
  cfg.shifts = toLong(M.rowDegrees());
  auto ts = trackingShifts(M);
  cfg.shifts.insert(cfg.shifts.end(), ts.begin(), ts.end());
  if (cfg.ncomps == 0) cfg.ncomps = 1, cfg.shifts = {0};
  Engine eng(cfg, opts);
  for (int j = 0; j < k; ++j) eng.addGenerator(detail::to_evec(eng, M.column(j), 0, r + j));
  eng.run();
  std::vector<std::vector<Poly>> cols;
  for (const auto& v : eng.trackingElements()) cols.push_back(detail::from_evec(v, M.ring(), r, r + k));
  std::vector<int> rowDeg(k, 0);
  if (auto cd = M.columnDegrees()) rowDeg = *cd;
  return ModulePresentation(M.ring(), k, std::move(cols), rowDeg);
}

}  // namespace

ModulePresentation syzygies(const ModulePresentation& M, const EngineOptions& opts) {
  return trim(rawSyzygies(M, opts), opts);
}

ModulePresentation eliminate(const ModulePresentation& M, const std::vector<int>& varsToKill,
                             const EngineOptions& opts) {
  const RingPtr& R = M.ring();
  int n = R->arity();
  std::vector<bool> kill(n, false);
  for (int v : varsToKill) {
    if (v < 0 || v >= n) throw Error("eliminate: variable index out of range");
    kill[v] = true;
  }
  int nk = int(std::count(kill.begin(), kill.end(), true));
  if (nk == 0) return M;
  std::vector<int> perm(n), inv(n);
  std::vector<std::string> vars;
  std::vector<int> weights;
  int pos = 0;
  for (int pass = 0; pass < 2; ++pass)
    for (int i = 0; i < n; ++i)
      if (kill[i] == (pass == 0)) {
        perm[i] = pos++;
        vars.push_back(R->vars()[i]);
        weights.push_back(R->gradingWeights()[i]);
      }
  for (int i = 0; i < n; ++i) inv[perm[i]] = i;
  OrderSpec spec{OrderKind::Block, nk == n ? std::vector<int>{n} : std::vector<int>{nk, n - nk}};
  RingPtr E = PolyRing::make(vars, weights, spec);
  std::vector<std::vector<Poly>> cols;
  for (const auto& col : M.columns()) {
    std::vector<Poly> c;
    for (const auto& p : col) c.push_back(change_ring(p, E, perm));
    cols.push_back(std::move(c));
  }
  ModulePresentation ME(E, M.rank(), std::move(cols), M.rowDegrees());
  GroebnerBasis G = buchberger(ME, opts);
  std::vector<std::vector<Poly>> out;
  for (const auto& g : G.generators) {
    bool free = true;
    for (const auto& p : g)
      for (const auto& t : p.terms())
        for (int i = 0; i < nk; ++i)
          if (t.m.e[i]) free = false;
    if (!free) continue;
    std::vector<Poly> c;
    for (const auto& p : g) c.push_back(change_ring(p, R, inv));
    out.push_back(std::move(c));
  }
  return ModulePresentation(R, M.rank(), std::move(out), M.rowDegrees());
}

ModulePresentation kernel_of_map(const ModulePresentation& A, const ModulePresentation& B,
                                 const EngineOptions& opts) {
  if (B.numColumns() > 0 && B.rank() != A.rank()) throw Error("kernel_of_map: dimension mismatch");
  if (B.numColumns() > 0) require_same_ring(A.ring(), B.ring(), "kernel_of_map");
  ModulePresentation C = B.numColumns() ? A.concat(B) : A;
  ModulePresentation S = rawSyzygies(C, opts);
  int k = A.numColumns();
  std::vector<std::vector<Poly>> cols;
  for (const auto& col : S.columns()) cols.emplace_back(col.begin(), col.begin() + k);
  std::vector<int> rowDeg(k, 0);
  if (auto cd = A.columnDegrees()) rowDeg = *cd;
  return trim(ModulePresentation(A.ring(), k, std::move(cols), rowDeg).compact(), opts);
}

// ---------------------------------------------------------------------------
// Dimension

namespace {

// Per component: leading monomials of a Groebner basis of the column span.
std::vector<std::vector<Monomial>> initialModule(const ModulePresentation& M, const EngineOptions& opts) {
  auto G = M.groebner(opts);
  std::vector<std::vector<Monomial>> out(M.rank());
  for (const auto& [c, m] : G->leadingTerms()) out[c].push_back(m);
  return out;
}

int minHittingSet(std::vector<uint32_t> supports, int n) {
  std::sort(supports.begin(), supports.end(),
            [](uint32_t a, uint32_t b) { return __builtin_popcount(a) < __builtin_popcount(b); });
  std::vector<uint32_t> minimal;
  for (uint32_t s : supports) {
    bool dominated = false;
    for (uint32_t m : minimal)
      if ((m & s) == m) dominated = true;
    if (!dominated) minimal.push_back(s);
  }
  int best = n + 1;
  auto rec = [&](auto&& self, uint32_t chosen, int count) -> void {
    if (count >= best) return;
    const uint32_t* open = nullptr;
    for (const auto& s : minimal)
      if ((s & chosen) == 0) {
        open = &s;
        break;
      }
    if (!open) {
      best = count;
      return;
    }
    for (int v = 0; v < n; ++v)
      if (*open & (1u << v)) self(self, chosen | (1u << v), count + 1);
  };
  rec(rec, 0, 0);
  return best;
}

int monomialIdealDim(const std::vector<Monomial>& gens, int n) {
  if (gens.empty()) return n;
  std::vector<uint32_t> supports;
  for (const auto& m : gens) {
    if (m.isOne()) return -1;
    supports.push_back(m.mask);
  }
  return n - minHittingSet(supports, n);
}

}  // namespace

int module_dim(const ModulePresentation& M, const EngineOptions& opts) {
  int n = M.ring()->arity();
  int dim = -1;
  for (const auto& gens : initialModule(M, opts)) dim = std::max(dim, monomialIdealDim(gens, n));
  return dim;
}

int krull_dim(const ModulePresentation& I, const EngineOptions& opts) {
  if (I.rank() != 1) throw Error("krull_dim expects an ideal presentation");
  return module_dim(I, opts);
}

int module_codim(const ModulePresentation& M, const EngineOptions& opts) {
  int d = module_dim(M, opts);
  if (d < 0) return INT_MAX;
  return M.ring()->arity() - d;
}

namespace {

using TPoly = std::vector<Integer>;

TPoly tsub(TPoly a, const TPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  return a;
}

TPoly tshift(const TPoly& a, long k) {
  TPoly r(k, 0);
  r.insert(r.end(), a.begin(), a.end());
  return r;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::vector<Monomial> out;
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return a.totalDegree() < b.totalDegree();
  });
  for (const auto& g : gens) {
    bool dominated = false;
    for (const auto& o : out)
      if (o.divides(g)) dominated = true;
    if (!dominated) out.push_back(g);
  }
  return out;
}

// Numerator of the Hilbert series of R/(gens) over the product of (1-t^w_i).
TPoly hilbertNumerator(std::vector<Monomial> gens, const PolyRing& R) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {1};
  bool coprime = true;
  for (std::size_t i = 0; i < gens.size() && coprime; ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!gens[i].coprime(gens[j])) {
        coprime = false;
        break;
      }
  if (coprime) {
    TPoly r{1};
    for (const auto& g : gens) r = tsub(r, tshift(r, R.degree(g)));
    return r;
  }
  Monomial m = gens.back();
  gens.pop_back();
  std::vector<Monomial> quot;
  for (const auto& g : gens) {
    Monomial q;
    for (int i = 0; i < kMaxVars; ++i) q.e[i] = g.e[i] > m.e[i] ? g.e[i] - m.e[i] : 0;
    q.refresh();
    quot.push_back(q);
  }
  return tsub(hilbertNumerator(gens, R), tshift(hilbertNumerator(quot, R), R.degree(m)));
}

}  // namespace

std::optional<int> hilbert_dim(const ModulePresentation& M, const EngineOptions& opts) {
  if (!M.ring()->positiveWeights() || !M.isGraded()) return std::nullopt;
  int n = M.ring()->arity();
  int dim = -1;
  for (const auto& gens : initialModule(M, opts)) {
    TPoly N = hilbertNumerator(gens, *M.ring());
    while (!N.empty() && N.back() == 0) N.pop_back();
    if (N.empty()) continue;
    int mult = 0;
    while (true) {
      Integer s = 0;
      for (const auto& c : N) s += c;
      if (s != 0) break;
      // Divide by (1 - t).
      TPoly q(N.size() - 1);
      Integer acc = 0;
      for (std::size_t i = 0; i + 1 < N.size(); ++i) {
        acc += N[i];
        q[i] = acc;
      }
      N = q;
      ++mult;
    }
    dim = std::max(dim, n - mult);
  }
  return dim;
}

// ---------------------------------------------------------------------------
// Minimal generators and resolutions

ModulePresentation minimal_generators(const ModulePresentation& M, const EngineOptions& opts) {
  auto cd = M.columnDegrees();
  if (!cd) throw NotGraded("minimal_generators requires graded input");
  std::vector<int> order;
  for (int j = 0; j < M.numColumns(); ++j) {
    const auto& col = M.column(j);
    if (std::any_of(col.begin(), col.end(), [](const Poly& p) { return !p.isZero(); })) order.push_back(j);
  }
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return (*cd)[a] < (*cd)[b]; });
  Engine eng(plainConfig(M), opts);
  std::vector<std::vector<Poly>> kept;
  for (int j : order) {
    long d = (*cd)[j];
    eng.run(d);
    EVec e = detail::to_evec(eng, M.column(j), 0);
    eng.reduce(e, false, false);
    if (e.empty()) continue;
    kept.push_back(M.column(j));
    eng.addGenerator(detail::to_evec(eng, M.column(j), 0));
  }
  return M.withColumns(std::move(kept));
}

ModulePresentation prune_generators(const ModulePresentation& M, const EngineOptions& opts) {
  std::vector<std::vector<Poly>> cols = M.compact().columns();
  // Shorter generators first so that bulky ones are the ones dropped.
  std::stable_sort(cols.begin(), cols.end(), [](const auto& a, const auto& b) {
    std::size_t sa = 0, sb = 0;
    for (const auto& p : a) sa += p.size();
    for (const auto& p : b) sb += p.size();
    return sa < sb;
  });
  for (int j = int(cols.size()) - 1; j >= 0; --j) {
    std::vector<std::vector<Poly>> others;
    for (int k = 0; k < int(cols.size()); ++k)
      if (k != j) others.push_back(cols[k]);
    if (others.empty()) break;
    GroebnerBasis G = buchberger(M.withColumns(others), opts);
    if (in_span(cols[j], G)) cols.erase(cols.begin() + j);
  }
  return M.withColumns(std::move(cols));
}

ModulePresentation trim(const ModulePresentation& M, const EngineOptions& opts) {
  if (M.isGraded()) return minimal_generators(M, opts);
  // Without grading, first pass to a reduced Groebner basis to bound the size.
  ModulePresentation C = M.compact();
  if (C.numColumns() > 1) {
    GroebnerBasis G = buchberger(C, opts);
    if (G.generators.size() < std::size_t(C.numColumns())) C = M.withColumns(G.generators);
  }
  return prune_generators(C, opts);
}

Resolution minimal_resolution(const ModulePresentation& M0, const EngineOptions& opts) {
  if (!M0.isGraded()) throw NotGraded("minimal_resolution requires graded input");
  const RingPtr& R = M0.ring();
  auto cols = M0.compact().columns();
  auto rowDeg = M0.rowDegrees();
  int rank = M0.rank();
  // Split off unit entries.
  while (true) {
    int pi = -1, pj = -1;
    for (int j = 0; j < int(cols.size()) && pi < 0; ++j)
      for (int i = 0; i < rank; ++i)
        if (!cols[j][i].isZero() && cols[j][i].isConstant()) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) break;
    Rational c = cols[pj][pi].constantTerm();
    std::vector<Poly> pivot = cols[pj];
    std::vector<std::vector<Poly>> next;
    for (int j = 0; j < int(cols.size()); ++j) {
      if (j == pj) continue;
      std::vector<Poly> col = cols[j];
      if (!col[pi].isZero()) {
        Poly f = col[pi] * Rational(1 / c);
        for (int i = 0; i < rank; ++i) col[i] = col[i] - f * pivot[i];
      }
      col.erase(col.begin() + pi);
      next.push_back(std::move(col));
    }
    rowDeg.erase(rowDeg.begin() + pi);
    --rank;
    cols = std::move(next);
  }
  Resolution res;
  res.rank0 = rank;
  res.degrees0 = rowDeg;
  if (rank == 0) return res;
  ModulePresentation cur = minimal_generators(ModulePresentation(R, rank, cols, rowDeg), opts);
  while (cur.numColumns() > 0) {
    res.differentials.push_back(cur);
    if (int(res.differentials.size()) > R->arity() + 1) throw Error("resolution longer than the Hilbert bound");
    cur = syzygies(cur, opts);
  }
  return res;
}

int projective_dimension(const ModulePresentation& M, const EngineOptions& opts) {
  return minimal_resolution(M, opts).pdim();
}

bool module_contains(const ModulePresentation& M, const ModulePresentation& N, const EngineOptions& opts) {
  if (M.rank() != N.rank()) return false;
  auto G = M.groebner(opts);
  for (const auto& col : N.columns())
    if (!in_span(col, *G)) return false;
  return true;
}

bool module_equal(const ModulePresentation& M, const ModulePresentation& N, const EngineOptions& opts) {
  if (M.rank() != N.rank()) return false;
  if (M.numColumns() && N.numColumns() && !same_ring(M.ring(), N.ring())) return false;
  return module_contains(M, N, opts) && module_contains(N, M, opts);
}

// ---------------------------------------------------------------------------
// Membership with tracked coefficients

MembershipSolver::MembershipSolver(const ModulePresentation& M, const EngineOptions& opts) : M_(M) {
  int r = M.rank(), k = M.numColumns();
  EngineConfig cfg;
  cfg.ring = M.ring().get();
  cfg.ncomps = r + k + 1;
  cfg.split = r;
  cfg.shifts = toLong(M.rowDegrees());
  auto ts = trackingShifts(M);
  cfg.shifts.insert(cfg.shifts.end(), ts.begin(), ts.end());
  cfg.shifts.push_back(0);
  eng_ = std::make_unique<Engine>(cfg, opts);
  for (int j = 0; j < k; ++j) eng_->addGenerator(detail::to_evec(*eng_, M.column(j), 0, r + j));
  eng_->run();
}

MembershipSolver::~MembershipSolver() = default;

std::optional<std::vector<Poly>> MembershipSolver::solve(const std::vector<Poly>& v) const {
  int r = M_.rank(), k = M_.numColumns();
  if (int(v.size()) != r) throw Error("membership: rank mismatch");
  EVec e = detail::to_evec(*eng_, v, 0, r + k);
  eng_->reduce(e, false, false);
  if (!e.empty() && e[0].comp < r) return std::nullopt;
  Integer lambda = 0;
  for (const auto& t : e)
    if (t.comp == r + k) lambda = t.c;
  auto T = detail::from_evec(e, M_.ring(), r, r + k);
  Rational f(Integer(-1), lambda);
  f.canonicalize();
  for (auto& p : T) p = p * f;
  return T;
}

}  // namespace freediv
