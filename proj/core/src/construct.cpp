#include "freediv/construct.hpp"

#include <algorithm>
#include <random>

#include "freediv/error.hpp"
#include "freediv/matrix.hpp"
#include "freediv/rep.hpp"

namespace freediv {

std::string status_name(HypothesisStatus s) {
  switch (s) {
    case HypothesisStatus::Pass: return "pass";
    case HypothesisStatus::Fail: return "fail";
    case HypothesisStatus::Skipped: return "skipped";
  }
  return "skipped";
}

bool PipelineReport::allPassed() const {
  for (const auto& h : hypotheses)
    if (h.status == HypothesisStatus::Fail) return false;
  return true;
}

const Hypothesis* PipelineReport::find(const std::string& name) const {
  for (const auto& h : hypotheses)
    if (h.name == name) return &h;
  return nullptr;
}

namespace {

VectorField rering_field(const VectorField& v, const RingPtr& R) {
  std::vector<Poly> c;
  for (const auto& p : v.coeffs) c.push_back(rering(p, R));
  return VectorField(R, std::move(c));
}

void record(PipelineReport& r, const std::string& name, bool ok, std::string evidence) {
  r.hypotheses.push_back({name, ok ? HypothesisStatus::Pass : HypothesisStatus::Fail, std::move(evidence)});
  if (!ok) {
    std::string msg = name + ": " + r.hypotheses.back().evidence;
    r.failure = r.failure ? *r.failure + "; " + msg : msg;
  }
}

void fail(PipelineReport& r, const std::string& name, const std::string& message, std::string evidence) {
  r.hypotheses.push_back({name, HypothesisStatus::Fail, std::move(evidence)});
  r.failure = r.failure ? *r.failure + "; " + message : message;
}

template <class F>
PipelineReport guarded(const std::string& construction, F&& body) {
  PipelineReport r;
  r.construction = construction;
  try {
    body(r);
  } catch (const BudgetExceeded& e) {
    r.budgetExceeded = true;
    r.certificate.reset();
    r.failure = std::string("budget exceeded: ") + e.what();
  }
  return r;
}

// Rank of Jac(phi) over the fraction field, by evaluation at random points.
int generic_rank(const PolyMap& phi) {
  ModulePresentation J = jacobian(phi);
  int n = phi.sourceArity(), m = phi.targetArity();
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<long> dist(-10000, 10000);
  int best = 0;
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<Rational> pt(n);
    for (auto& x : pt) x = Rational(dist(rng));
    QMatrix A(m, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < m; ++j) A[j][i] = evaluate(J.entry(j, i), pt);
    best = std::max(best, qrank(A, n));
  }
  return best;
}

std::string count_str(int k, const char* what) { return std::to_string(k) + " " + what; }

// Generators of Der(-log f), from a freeness certificate when available.
std::vector<VectorField> target_fields(const FreenessResult& fr) {
  if (fr.certificate) return fr.certificate->basis;
  return module_fields(*fr.derlog);
}

}  // namespace

// ---------------------------------------------------------------------------

PipelineReport pullback_main(const PolyMap& phi0, const Poly& f0, PullbackMode mode, const CheckOptions& opts) {
  return guarded(mode == PullbackMode::Strong ? "pullback strong" : "pullback weak", [&](PipelineReport& r) {
    require_same_ring(f0.ring(), phi0.target, "pullback_main");
    Poly f = f0.normalized();
    FreenessResult fr = is_free_saito(f, opts);
    for (const auto& n : fr.notices) r.notes.push_back("target: " + n);
    record(r, hyp::kTargetFree, fr.free(),
           fr.free() ? "Saito determinant is a unit multiple of f" : fr.notFree->reason);
    if (!fr.free()) return;
    if (!unit_multiple_eq(fr.certificate->divisorEquation, f)) f = fr.certificate->divisorEquation;

    Poly fphi = substitute_map(f, phi0);
    record(r, hyp::kNonzero, !fphi.isZero(), fphi.isZero() ? "image of the map lies inside the divisor" : "ok");
    if (fphi.isZero()) return;
    Poly g = squarefree_part(fphi);
    r.divisor = g;
    if (!unit_multiple_eq(g, fphi)) {
      r.notes.push_back("pullback is not reduced; using its squarefree part");
      if (mode == PullbackMode::Strong) r.notes.push_back("strong mode predicts a reduced pullback");
    }

    PolyMap phi = graded_map(phi0);
    bool graded = jacobian(phi).isGraded() && phi.source->positiveWeights();
    if (!graded) r.notes.push_back("map is not weighted homogeneous; graded tests are unavailable");
    const EngineOptions& eo = opts.engine;

    std::vector<VectorField> vertical;
    int n = phi.sourceArity();
    int rk = generic_rank(phi);
    {
      ModulePresentation V = vertical_fields(phi, eo);
      for (const auto& v : module_fields(V)) vertical.push_back(rering_field(v, phi0.source));
      if (mode == PullbackMode::Weak) {
        bool ok = int(vertical.size()) == n - rk;
        std::string ev = count_str(int(vertical.size()), "generators") + ", rank " + std::to_string(n - rk);
        if (!graded) ev += " (not graded: count is an upper bound)";
        record(r, hyp::kVerticalFree, ok, ev);
      }
    }

    Lifter lifter(phi, eo);
    std::vector<VectorField> lifted;
    int lifts = 0, total = 0;
    for (const auto& eta : target_fields(fr)) {
      ++total;
      auto w = lifter.lift(rering_field(eta, phi.target));
      if (!w) continue;
      ++lifts;
      LiftWitness lw{eta, rering_field(w->xi, phi0.source), {}};
      lw.residual = std::vector<Poly>(w->residual.size(), Poly(phi0.source));
      r.lifts.push_back(lw);
      lifted.push_back(lw.xi);
    }
    record(r, hyp::kLiftable, lifts == total, std::to_string(lifts) + " of " + std::to_string(total) + " lift");

    if (mode == PullbackMode::Weak) {
      int c = preimage_codim(phi0, singular_locus_ideal(f), eo);
      record(r, hyp::kPreimageCodim, c >= 2, c == kInfiniteCodim ? "empty preimage" : "codimension " + std::to_string(c));
    } else if (!graded) {
      fail(r, hyp::kT1, "T1 not Cohen-Macaulay of codimension 2", "not graded; test unavailable");
    } else {
      bool ok = cm_codim2(t1_presentation(phi), eo);
      if (ok) record(r, hyp::kT1, true, "pdim <= 2 and support of codimension >= 2");
      else fail(r, hyp::kT1, "T1 not Cohen-Macaulay of codimension 2", "pdim or codimension test failed");
    }
    if (!r.allPassed()) return;

    std::vector<VectorField> basis = vertical;
    std::vector<Provenance> prov(vertical.size(), Provenance::Vertical);
    for (const auto& l : lifted) {
      basis.push_back(l);
      prov.push_back(Provenance::Lifted);
    }
    if (int(basis.size()) != n) {
      r.failure = "basis has " + std::to_string(basis.size()) + " fields, arity is " + std::to_string(n);
      return;
    }
    auto cert = certify_basis(basis, g, prov);
    if (!cert) {
      r.failure = "determinant of vertical and lifted fields is not a unit multiple of the reduced pullback";
      return;
    }
    cert->globalOnly = !graded;
    r.certificate = std::move(cert);
  });
}

PipelineReport euler_variant(const PolyMap& phi0, const Poly& f0, const std::vector<int>& weights,
                             const CheckOptions& opts) {
  return guarded("euler-lift", [&](PipelineReport& r) {
    require_same_ring(f0.ring(), phi0.target, "euler_variant");
    if (int(weights.size()) != phi0.targetArity()) throw Error("euler_variant: one weight per target variable");
    Poly f = f0.normalized();
    auto wd = weighted_degree(f, weights);
    record(r, hyp::kWeighted, wd.homogeneous,
           wd.homogeneous ? "degree " + std::to_string(wd.degree) : "terms of different weighted degree");
    if (!wd.homogeneous) return;
    const EngineOptions& eo = opts.engine;
    ModulePresentation N = euler_module_N(phi0, weights);
    if (!N.isGraded()) {
      fail(r, hyp::kN, "N not Cohen-Macaulay of codimension 2", "not graded; test unavailable");
      return;
    }
    record(r, hyp::kN, cm_codim2(N, eo), "pdim and codimension of coker");
    CheckOptions fo = opts;
    fo.allowNonhomogeneous = true;
    FreenessResult fr = is_free_saito(f, fo);
    for (const auto& n : fr.notices) r.notes.push_back("target: " + n);
    ModulePresentation L = liftable_module(phi0, eo);
    VectorField E = VectorField::zero(phi0.target);
    for (int j = 0; j < phi0.targetArity(); ++j) E.coeffs[j] = Poly::variable(phi0.target, j) * Rational(weights[j]);
    ModulePresentation LE = L.concat(fields_module(phi0.target, {E}, L.rowDegrees()));
    ModulePresentation D = *fr.derlog;
    bool contained = module_contains(LE, D, eo);
    record(r, hyp::kEulerContainment, contained,
           contained ? "every generator lies in the span" : "some generator lies outside the span");
    if (!r.allPassed()) return;

    Poly fphi = substitute_map(f, phi0);
    if (fphi.isZero()) {
      record(r, hyp::kNonzero, false, "image of the map lies inside the divisor");
      return;
    }
    Poly g = squarefree_part(fphi);
    r.divisor = g;
    CheckOptions po = opts;
    po.allowNonhomogeneous = true;
    FreenessResult pr = is_free_saito(g, po);
    for (const auto& n : pr.notices) r.notes.push_back("pullback: " + n);
    if (!find_weights({g}, g.ring())) {
      ModulePresentation J = singular_locus_ideal(g);
      ModulePresentation Jh(g.ring(), 1, {J.columns().begin(), J.columns().end() - 1});
      bool euler = in_span({g}, buchberger(Jh, eo));
      r.notes.push_back(euler ? "pullback lies in its Jacobian ideal"
                              : "no Euler-like vector field: pullback is not weighted homogeneous and not in its "
                                "Jacobian ideal");
    }
    record(r, hyp::kPullbackFree, pr.free(), pr.free() ? "Saito criterion" : pr.notFree->reason);
    if (pr.free()) r.certificate = pr.certificate;
  });
}

// ---------------------------------------------------------------------------

PipelineReport ffstar(const Poly& h0, const std::vector<Poly>& g, const std::vector<std::string>& newVars,
                      const CheckOptions& opts) {
  return guarded("ffstar", [&](PipelineReport& r) {
    const RingPtr& R = h0.ring();
    int m = R->arity(), k = int(g.size());
    if (k == 0) throw Error("ffstar: at least one ideal generator is required");
    if (int(newVars.size()) != k) throw Error("ffstar: one new variable per ideal generator");
    for (const auto& gi : g)
      if (!gi.isZero()) require_same_ring(gi.ring(), R, "ffstar");
    for (const auto& v : newVars)
      if (R->indexOf(v) >= 0) throw Error("ffstar: new variable " + v + " already in the ring");
    const EngineOptions& eo = opts.engine;
    Poly h = h0.normalized();
    FreenessResult fr = is_free_saito(h, opts);
    for (const auto& n : fr.notices) r.notes.push_back("h: " + n);
    record(r, hyp::kTargetFree, fr.free(), fr.free() ? "Saito criterion" : fr.notFree->reason);
    if (!fr.free()) return;
    h = fr.certificate->divisorEquation;

    ModulePresentation I = ModulePresentation::ideal(R, g);
    if (!I.isGraded()) {
      auto w = find_weights(g, R);
      if (!w) {
        fail(r, hyp::kIdealCM, "ideal not Cohen-Macaulay of codimension 2", "generators not weighted homogeneous");
        return;
      }
      RingPtr Rw = reweighted(R, *w);
      std::vector<Poly> gw;
      for (const auto& p : g) gw.push_back(rering(p, Rw));
      I = ModulePresentation::ideal(Rw, gw);
    }
    bool unit = module_codim(I, eo) == kInfiniteCodim;
    bool cm = cm_codim2(I, eo);
    record(r, hyp::kIdealCM, cm, unit ? "unit ideal" : "pdim and codimension of the quotient");
    if (unit) r.notes.push_back("unit ideal: the result is a product-union up to a change of coordinates");
    ModulePresentation IR = ModulePresentation::ideal(R, g);
    ModulePresentation DI = derlog_ideal(IR, eo);
    std::vector<VectorField> hf = fr.certificate->basis;
    bool contained = module_contains(DI, fields_module(R, hf, DI.rowDegrees()), eo);
    record(r, hyp::kIdealContainment, contained, contained ? "each basis field preserves I" : "containment fails");
    if (!r.allPassed()) return;

    std::vector<std::string> vars = R->vars();
    vars.insert(vars.end(), newVars.begin(), newVars.end());
    RingPtr X = PolyRing::make(vars, std::vector<int>(m + k, 1), R->orderSpec().kind == OrderKind::Block
                                                                      ? OrderSpec{}
                                                                      : R->orderSpec());
    std::vector<int> embed(m);
    for (int i = 0; i < m; ++i) embed[i] = i;
    auto up = [&](const Poly& p) { return change_ring(p, X, embed); };
    Poly G(X);
    for (int j = 0; j < k; ++j) G += up(g[j]) * Poly::variable(X, m + j);
    Poly F = (up(h) * G).normalized();
    r.divisor = F;

    std::vector<VectorField> basis;
    std::vector<Provenance> prov;
    VectorField eu = VectorField::zero(X);
    for (int j = 0; j < k; ++j) eu.coeffs[m + j] = Poly::variable(X, m + j);
    basis.push_back(eu);
    prov.push_back(Provenance::Lifted);

    MembershipSolver solver(IR, eo);
    for (const auto& a : hf) {
      VectorField xi = VectorField::zero(X);
      for (int i = 0; i < m; ++i) xi.coeffs[i] = up(a.coeffs[i]);
      for (int j = 0; j < k; ++j) {
        auto gamma = solver.solve({apply_field(a, g[j])});
        if (!gamma) throw Error("ffstar: field does not preserve the ideal");
        for (int l = 0; l < k; ++l) xi.coeffs[m + l] -= up((*gamma)[l]) * Poly::variable(X, m + j);
      }
      basis.push_back(xi);
      prov.push_back(Provenance::Lifted);
    }
    ModulePresentation S = syzygies(ModulePresentation::ideal(R, g).withRowDegrees({0}), eo);
    for (const auto& col : S.columns()) {
      VectorField v = VectorField::zero(X);
      for (int l = 0; l < k; ++l) v.coeffs[m + l] = up(col[l]);
      basis.push_back(v);
      prov.push_back(Provenance::Vertical);
    }
    r.notes.push_back(std::to_string(S.numColumns()) + " vertical fields from syzygies of the ideal generators");
    if (int(basis.size()) != m + k) {
      r.failure = "basis has " + std::to_string(basis.size()) + " fields, arity is " + std::to_string(m + k);
      return;
    }
    auto cert = certify_basis(basis, F, prov);
    if (!cert) {
      r.failure = "determinant of the assembled fields is not a unit multiple of the divisor";
      return;
    }
    r.certificate = std::move(cert);
  });
}

PipelineReport ffstar(const Poly& h, const std::vector<Poly>& g, const CheckOptions& opts) {
  std::vector<std::string> names;
  for (std::size_t j = 1; names.size() < g.size(); ++j) {
    std::string v = "y" + std::to_string(j);
    if (h.ring()->indexOf(v) < 0) names.push_back(v);
  }
  return ffstar(h, g, names, opts);
}

PipelineReport ffstar_canonical(const Poly& h0, const CheckOptions& opts) {
  Poly h = h0.normalized();
  const RingPtr& R = h.ring();
  std::vector<Poly> J;
  for (int i = 0; i < R->arity(); ++i) J.push_back(differentiate(h, i));
  std::vector<Poly> g = J;
  g.push_back(h);
  PipelineReport r = ffstar(h, g, opts);
  r.construction = "ffstar canonical";
  if (r.budgetExceeded) return r;
  std::vector<Poly> nz;
  for (const auto& p : J)
    if (!p.isZero()) nz.push_back(p);
  bool inJ = !nz.empty() && in_span({h}, buchberger(ModulePresentation::ideal(R, nz), opts.engine));
  if (inJ) {
    PipelineReport v = ffstar(h, J, opts);
    v.construction = "ffstar canonical without h";
    r.variants.push_back(std::move(v));
  } else {
    r.notes.push_back("h is not in its Jacobian ideal; no smaller variant");
  }
  return r;
}

// ---------------------------------------------------------------------------

PolyMap castling_map(int n, const RingPtr& S) {
  if (n < 1) throw Error("castling: n must be positive");
  if (S->arity() != n + 1) throw Error("castling: target must have n+1 variables");
  RingPtr X = matrix_ring(n, n + 1);
  PolyMatrix A = generic_matrix(X, n, n + 1);
  std::vector<int> rows(n);
  for (int i = 0; i < n; ++i) rows[i] = i;
  std::vector<Poly> comps;
  for (int del = 0; del <= n; ++del) {
    std::vector<int> cols;
    for (int j = 0; j <= n; ++j)
      if (j != del) cols.push_back(j);
    Poly d = determinant(submatrix(A, rows, cols), X);
    comps.push_back((del + 1) % 2 ? -d : d);
  }
  return PolyMap(X, S, std::move(comps));
}

std::vector<VectorField> sl_left_fields(const RingPtr& X, int n, int k) {
  if (X->arity() != n * k) throw Error("sl_left_fields: ring is not M_{n,k}");
  auto x = [&](int i, int j) { return Poly::variable(X, i * k + j); };
  std::vector<VectorField> out;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      if (p == q) continue;
      VectorField v = VectorField::zero(X);
      for (int j = 0; j < k; ++j) v.coeffs[p * k + j] = x(q, j);
      out.push_back(v);
    }
  for (int p = 0; p + 1 < n; ++p) {
    VectorField v = VectorField::zero(X);
    for (int j = 0; j < k; ++j) {
      v.coeffs[p * k + j] = x(p, j);
      v.coeffs[(p + 1) * k + j] = -x(p + 1, j);
    }
    out.push_back(v);
  }
  return out;
}

VectorField castling_lift(const PolyMap& phi, int n, int p, int q) {
  const RingPtr& X = phi.source;
  int k = n + 1;
  auto x = [&](int i, int j) { return Poly::variable(X, i * k + j); };
  VectorField v = VectorField::zero(X);
  if (p != q) {
    for (int i = 0; i < n; ++i) v.coeffs[i * k + p] -= x(i, q);
  } else {
    for (int j = 0; j < k; ++j) v.coeffs[j] += x(0, j);
    for (int i = 0; i < n; ++i) v.coeffs[i * k + q] -= x(i, q);
  }
  return v;
}

PipelineReport castling(const Poly& f0, int n, const CheckOptions& opts) {
  return guarded("castling", [&](PipelineReport& r) {
    const RingPtr& S = f0.ring();
    if (S->arity() != n + 1) throw Error("castling: f must live on n+1 variables");
    Poly f = f0.normalized();
    FreenessResult fr = is_free_saito(f, opts);
    for (const auto& nt : fr.notices) r.notes.push_back("f: " + nt);
    record(r, hyp::kTargetFree, fr.free(), fr.free() ? "Saito criterion" : fr.notFree->reason);
    if (!fr.free()) return;
    f = fr.certificate->divisorEquation;
    bool susp = is_suspended(f, opts.engine);
    record(r, hyp::kNotSuspended, !susp,
           susp ? "some logarithmic field has a nonzero constant coefficient" : "Der(-log f) inside m T0");
    if (susp) return;

    PolyMap phi = castling_map(n, S);
    const RingPtr& X = phi.source;
    Poly F = substitute_map(f, phi).normalized();
    r.divisor = F;
    std::vector<VectorField> basis = sl_left_fields(X, n, n + 1);
    std::vector<Provenance> prov(basis.size(), Provenance::Vertical);
    int k = n + 1;
    std::vector<std::vector<VectorField>> closed(k, std::vector<VectorField>(k));
    for (int p = 0; p < k; ++p)
      for (int q = 0; q < k; ++q) {
        closed[p][q] = castling_lift(phi, n, p, q);
        VectorField e = VectorField::zero(S);
        e.coeffs[q] = Poly::variable(S, p);
        auto pushed = push_forward(phi, closed[p][q]);
        if (pushed != compose_field(e, phi)) throw Error("castling: closed-form lift failed its check");
      }
    for (const auto& eta : fr.certificate->basis) {
      VectorField xi = VectorField::zero(X);
      for (int q = 0; q < k; ++q)
        for (const auto& t : eta.coeffs[q].terms()) {
          int p = 0;
          while (p < k && t.m.e[p] == 0) ++p;
          if (p == k) throw Error("castling: field has a constant coefficient");
          Monomial rest = t.m;
          rest.e[p] -= 1;
          rest.refresh();
          Poly a = substitute_map(Poly::monomial(S, rest, t.c), phi);
          xi = xi + closed[p][q] * a;
        }
      LiftWitness w{eta, xi, {}};
      auto pushed = push_forward(phi, xi);
      auto target = compose_field(eta, phi);
      for (int j = 0; j < k; ++j) w.residual.push_back(pushed[j] - target[j]);
      if (!w.exact()) throw Error("castling: assembled lift has a nonzero residual");
      r.lifts.push_back(w);
      basis.push_back(xi);
      prov.push_back(Provenance::Lifted);
    }
    r.notes.push_back(std::to_string(n * n - 1) + " sl_n fields and " + std::to_string(k) + " lifts");
    auto cert = certify_basis(basis, F, prov);
    if (!cert) {
      r.failure = "determinant of the assembled fields is not a unit multiple of the pullback";
      return;
    }
    r.certificate = std::move(cert);
  });
}

VectorField eta_generator(const PolyMap& phi, const EngineOptions& opts) {
  int n = phi.targetArity();
  if (phi.sourceArity() != n + 1) throw Error("eta_generator: source must have one more variable than target");
  const RingPtr& X = phi.source;
  ModulePresentation J = jacobian(phi);
  PolyMatrix A(n, std::vector<Poly>(n + 1));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i <= n; ++i) A[j][i] = J.entry(j, i);
  std::vector<int> rows(n);
  for (int j = 0; j < n; ++j) rows[j] = j;
  std::vector<Poly> d;
  for (int del = 0; del <= n; ++del) {
    std::vector<int> cols;
    for (int i = 0; i <= n; ++i)
      if (i != del) cols.push_back(i);
    d.push_back(determinant(submatrix(A, rows, cols), X));
  }
  int codim = module_codim(ModulePresentation::ideal(X, d).compact(), opts);
  if (d.size() && std::all_of(d.begin(), d.end(), [](const Poly& p) { return p.isZero(); })) codim = 0;
  if (codim < 2)
    throw Error("eta_generator: critical locus has codimension " + std::to_string(codim) + ", not 2");
  VectorField eta = VectorField::zero(X);
  for (int i = 0; i <= n; ++i) eta.coeffs[i] = (i + 1) % 2 ? -d[i] : d[i];
  for (const auto& p : push_forward(phi, eta))
    if (!p.isZero()) throw Error("eta_generator: residual is nonzero");
  return eta;
}

}  // namespace freediv
