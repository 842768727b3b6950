#include "freediv/lift.hpp"

#include "freediv/error.hpp"

namespace freediv {

bool LiftWitness::exact() const {
  for (const auto& p : residual)
    if (!p.isZero()) return false;
  return true;
}

namespace {

// Component degrees for the source grading, if every component is homogeneous.
std::optional<std::vector<int>> componentDegrees(const PolyMap& phi) {
  std::vector<int> deg;
  for (const auto& c : phi.components) {
    if (c.isZero()) {
      deg.push_back(1);
      continue;
    }
    auto wd = weighted_degree(c, phi.source->gradingWeights());
    if (!wd.homogeneous) return std::nullopt;
    deg.push_back(int(wd.degree));
  }
  return deg;
}

std::vector<int> negated(const std::vector<int>& v) {
  std::vector<int> r;
  for (int x : v) r.push_back(-x);
  return r;
}

ModulePresentation rering_module(const ModulePresentation& M, const RingPtr& R) {
  std::vector<std::vector<Poly>> cols;
  for (const auto& col : M.columns()) {
    std::vector<Poly> c;
    for (const auto& p : col) c.push_back(rering(p, R));
    cols.push_back(std::move(c));
  }
  return ModulePresentation(R, M.rank(), std::move(cols), M.rowDegrees());
}

ModulePresentation withTargetColumns(const PolyMap& phi0, std::vector<std::vector<Poly>> extra,
                                     std::vector<int> extraDegrees) {
  PolyMap phi = graded_map(phi0);
  for (auto& c : extra)
    for (auto& p : c) p = rering(p, phi.source);
  ModulePresentation J = jacobian(phi);
  auto cols = J.columns();
  for (auto& c : extra) cols.push_back(std::move(c));
  ModulePresentation M(phi.source, J.rank(), std::move(cols), J.rowDegrees());
  if (auto cd = J.columnDegrees(); cd && componentDegrees(phi)) {
    cd->insert(cd->end(), extraDegrees.begin(), extraDegrees.end());
    M = M.withColumnDegrees(*cd);
  }
  return M;
}

}  // namespace

ModulePresentation jacobian(const PolyMap& phi) {
  int n = phi.sourceArity(), m = phi.targetArity();
  std::vector<std::vector<Poly>> cols(n, std::vector<Poly>(m));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) cols[i][j] = differentiate(phi.components[j], i);
  auto deg = componentDegrees(phi);
  if (!deg) return ModulePresentation(phi.source, m, std::move(cols));
  ModulePresentation J(phi.source, m, std::move(cols), negated(*deg));
  return J.withColumnDegrees(negated(phi.source->gradingWeights()));
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> find_map_weights(const PolyMap& phi) {
  auto w = find_weights(phi.components, phi.source);
  if (!w) return std::nullopt;
  std::vector<int> deg;
  for (const auto& c : phi.components) {
    if (c.isZero() || c.isConstant()) {
      if (!c.isZero()) return std::nullopt;
      deg.push_back(1);
      continue;
    }
    deg.push_back(int(weighted_degree(c, *w).degree));
  }
  return std::make_pair(*w, deg);
}

PolyMap reweighted_map(const PolyMap& phi, const std::vector<int>& sourceWeights,
                       const std::vector<int>& targetWeights) {
  RingPtr X = reweighted(phi.source, sourceWeights);
  RingPtr S = reweighted(phi.target, targetWeights);
  std::vector<Poly> comps;
  for (const auto& c : phi.components) comps.push_back(rering(c, X));
  return PolyMap(X, S, std::move(comps));
}

PolyMap graded_map(const PolyMap& phi) {
  if (componentDegrees(phi) && phi.source->positiveWeights()) return phi;
  auto w = find_map_weights(phi);
  if (!w) return phi;
  return reweighted_map(phi, w->first, w->second);
}

ModulePresentation vertical_fields(const PolyMap& phi, const EngineOptions& opts) {
  ModulePresentation S = syzygies(jacobian(phi), opts);
  if (S.rowDegrees().empty() || !componentDegrees(phi))
    S = S.withRowDegrees(negated(phi.source->gradingWeights()));
  return S;
}

ModulePresentation t1_presentation(const PolyMap& phi) { return jacobian(graded_map(phi)); }

bool cm_codim2(const ModulePresentation& M, const EngineOptions& opts) {
  if (!M.isGraded()) throw NotGraded("cm_codim2 requires graded input");
  int codim = module_codim(M, opts);
  if (codim == INT_MAX) return true;
  if (codim < 2) return false;
  return projective_dimension(M, opts) <= 2;
}

std::vector<Poly> compose_field(const VectorField& eta, const PolyMap& phi) {
  require_same_ring(eta.ring, phi.target, "compose_field");
  std::vector<Poly> out;
  for (const auto& c : eta.coeffs) out.push_back(substitute_map(c, phi));
  return out;
}

std::vector<Poly> push_forward(const PolyMap& phi, const VectorField& xi) {
  require_same_ring(xi.ring, phi.source, "push_forward");
  std::vector<Poly> out;
  for (const auto& c : phi.components) out.push_back(apply_field(xi, c));
  return out;
}

Lifter::Lifter(const PolyMap& phi, const EngineOptions& opts) : phi_(phi), solver_(jacobian(phi), opts) {}

std::optional<LiftWitness> Lifter::lift(const VectorField& eta) const {
  std::vector<Poly> target = compose_field(eta, phi_);
  auto c = solver_.solve(target);
  if (!c) return std::nullopt;
  LiftWitness w;
  w.eta = eta;
  w.xi = VectorField(phi_.source, *c);
  auto pushed = push_forward(phi_, w.xi);
  for (std::size_t j = 0; j < pushed.size(); ++j) w.residual.push_back(pushed[j] - target[j]);
  if (!w.exact()) throw Error("lift residual is nonzero");
  return w;
}

std::optional<LiftWitness> lift_field(const PolyMap& phi, const VectorField& eta, const EngineOptions& opts) {
  return Lifter(phi, opts).lift(eta);
}

ModulePresentation liftable_module(const PolyMap& phi0, const EngineOptions& opts) {
  PolyMap phi = graded_map(phi0);
  int n = phi.sourceArity(), m = phi.targetArity();
  auto deg = componentDegrees(phi);
  std::vector<std::string> vars = phi.source->vars();
  std::vector<int> weights = phi.source->gradingWeights();
  for (int j = 0; j < m; ++j) {
    vars.push_back("@" + phi.target->vars()[j]);
    weights.push_back(deg ? (*deg)[j] : 1);
  }
  RingPtr G = PolyRing::make(vars, weights, OrderSpec{OrderKind::Block, {n, m}});
  std::vector<int> embedX(n), toTarget(n + m, -1);
  for (int i = 0; i < n; ++i) embedX[i] = i;
  for (int j = 0; j < m; ++j) toTarget[n + j] = j;
  std::vector<std::vector<Poly>> cols;
  for (int i = 0; i < n; ++i) {
    std::vector<Poly> c;
    for (int j = 0; j < m; ++j) c.push_back(change_ring(differentiate(phi.components[j], i), G, embedX));
    cols.push_back(std::move(c));
  }
  for (int j = 0; j < m; ++j) {
    Poly g = Poly::variable(G, n + j) - change_ring(phi.components[j], G, embedX);
    for (int k = 0; k < m; ++k) {
      std::vector<Poly> c(m, Poly(G));
      c[k] = g;
      cols.push_back(std::move(c));
    }
  }
  std::vector<int> rowDeg(m, 0);
  if (deg) rowDeg = negated(*deg);
  std::vector<int> kill(n);
  for (int i = 0; i < n; ++i) kill[i] = i;
  ModulePresentation E = eliminate(ModulePresentation(G, m, std::move(cols), rowDeg), kill, opts);
  RingPtr S = deg ? reweighted(phi0.target, *deg) : phi0.target;
  std::vector<std::vector<Poly>> out;
  for (const auto& col : E.columns()) {
    std::vector<Poly> c;
    for (const auto& p : col) c.push_back(change_ring(p, S, toTarget));
    out.push_back(std::move(c));
  }
  ModulePresentation L = trim(ModulePresentation(S, m, std::move(out), rowDeg).compact(), opts);
  L = rering_module(L, phi0.target);
  if (!deg) L = L.withRowDegrees(negated(phi0.target->gradingWeights()));
  return L;
}

ModulePresentation euler_module_N(const PolyMap& phi, const std::vector<int>& weights) {
  if (int(weights.size()) != phi.targetArity()) throw Error("euler_module_N: one weight per target variable");
  std::vector<Poly> col;
  for (int j = 0; j < phi.targetArity(); ++j) {
    if (weights[j] < 0) throw Error("euler_module_N: weights must be nonnegative");
    col.push_back(phi.components[j] * Rational(weights[j]));
  }
  return withTargetColumns(phi, {col}, {0});
}

MultiweightModule multiweight_module(const PolyMap& phi, const std::vector<std::vector<int>>& weightMatrix) {
  int m = phi.targetArity();
  if (int(weightMatrix.size()) != m) throw Error("multiweight_module: one row per target variable");
  int p = weightMatrix.empty() ? 0 : int(weightMatrix[0].size());
  if (p < 1) throw Error("multiweight_module: at least one weighting is required");
  MultiweightModule res;
  for (const auto& c : phi.components)
    if (c.isZero()) res.degenerate = true;
  std::vector<std::vector<Poly>> extra;
  for (int k = 0; k < p; ++k) {
    std::vector<Poly> col;
    for (int j = 0; j < m; ++j) {
      if (int(weightMatrix[j].size()) != p) throw Error("multiweight_module: ragged weight matrix");
      col.push_back(phi.components[j] * Rational(weightMatrix[j][k]));
    }
    extra.push_back(std::move(col));
  }
  res.presentation = withTargetColumns(phi, std::move(extra), std::vector<int>(p, 0));
  return res;
}

MultiweightModule normal_crossings_module(const PolyMap& phi) {
  int m = phi.targetArity();
  std::vector<std::vector<int>> W(m, std::vector<int>(m, 0));
  for (int j = 0; j < m; ++j) W[j][j] = 1;
  return multiweight_module(phi, W);
}

int preimage_codim(const PolyMap& phi, const ModulePresentation& I, const EngineOptions& opts) {
  if (I.rank() != 1) throw Error("preimage_codim expects an ideal presentation");
  std::vector<Poly> gens;
  for (const auto& col : I.columns()) gens.push_back(substitute_map(col[0], phi));
  return module_codim(ModulePresentation::ideal(phi.source, gens), opts);
}

}  // namespace freediv
