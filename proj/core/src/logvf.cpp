#include "freediv/logvf.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "freediv/error.hpp"

namespace freediv {

VectorField::VectorField(RingPtr ring, std::vector<Poly> coeffs) : ring(std::move(ring)), coeffs(std::move(coeffs)) {
  if (int(this->coeffs.size()) != this->ring->arity()) throw Error("vector field length differs from arity");
  for (auto& c : this->coeffs) {
    if (!c.ring()) c = Poly(this->ring);
    else if (!same_ring(c.ring(), this->ring)) throw RingMismatch("vector field coefficient ring");
  }
}

VectorField VectorField::zero(const RingPtr& ring) {
  return VectorField(ring, std::vector<Poly>(ring->arity(), Poly(ring)));
}

VectorField VectorField::euler(const RingPtr& ring, const std::vector<int>& weights) {
  std::vector<Poly> c;
  for (int i = 0; i < ring->arity(); ++i) c.push_back(Poly::variable(ring, i) * Rational(weights[i]));
  return VectorField(ring, std::move(c));
}

bool VectorField::isZero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Poly& p) { return p.isZero(); });
}

VectorField VectorField::operator+(const VectorField& o) const {
  VectorField r = *this;
  for (std::size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] += o.coeffs[i];
  return r;
}

VectorField VectorField::operator-(const VectorField& o) const {
  VectorField r = *this;
  for (std::size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] -= o.coeffs[i];
  return r;
}

VectorField VectorField::operator*(const Poly& p) const {
  VectorField r = *this;
  for (auto& c : r.coeffs) c = c * p;
  return r;
}

std::string VectorField::str() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < ring->arity(); ++i) {
    if (coeffs[i].isZero()) continue;
    os << (first ? "" : " + ") << "(" << coeffs[i].str() << ")*d/d" << ring->vars()[i];
    first = false;
  }
  return first ? "0" : os.str();
}

Poly apply_field(const VectorField& eta, const Poly& p) {
  if (!p.isZero()) require_same_ring(eta.ring, p.ring(), "apply_field");
  Poly s(eta.ring);
  for (int i = 0; i < eta.ring->arity(); ++i)
    if (!eta.coeffs[i].isZero()) s += eta.coeffs[i] * differentiate(p, i);
  return s;
}

VectorField bracket(const VectorField& a, const VectorField& b) {
  std::vector<Poly> c;
  for (int i = 0; i < a.ring->arity(); ++i) c.push_back(apply_field(a, b.coeffs[i]) - apply_field(b, a.coeffs[i]));
  return VectorField(a.ring, std::move(c));
}

ModulePresentation fields_module(const RingPtr& ring, const std::vector<VectorField>& fields,
                                 std::vector<int> rowDegrees) {
  std::vector<std::vector<Poly>> cols;
  for (const auto& f : fields) cols.push_back(f.coeffs);
  if (rowDegrees.empty()) {
    rowDegrees.resize(ring->arity());
    for (int i = 0; i < ring->arity(); ++i) rowDegrees[i] = -ring->gradingWeights()[i];
  }
  return ModulePresentation(ring, ring->arity(), std::move(cols), std::move(rowDegrees));
}

std::vector<VectorField> module_fields(const ModulePresentation& M) {
  std::vector<VectorField> out;
  for (const auto& col : M.columns()) out.emplace_back(M.ring(), col);
  return out;
}

std::string provenance_name(Provenance p) {
  switch (p) {
    case Provenance::Vertical: return "vertical";
    case Provenance::Lifted: return "lifted";
    case Provenance::Direct: return "direct";
  }
  return "direct";
}

PolyMatrix FreeDivisorCertificate::saitoMatrix() const {
  if (basis.empty()) return {};
  int n = basis[0].ring->arity();
  PolyMatrix A(n, std::vector<Poly>(basis.size()));
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (int i = 0; i < n; ++i) A[i][j] = basis[j].coeffs[i];
  return A;
}

bool is_logarithmic(const VectorField& eta, const Poly& f) {
  Poly e = apply_field(eta, f);
  if (e.isZero()) return true;
  if (f.isConstant()) return true;
  return exact_divide(e, f).has_value();
}

bool FreeDivisorCertificate::verify() const {
  if (basis.empty() || sgn(unitFactor) == 0) return false;
  const RingPtr& R = basis[0].ring;
  if (int(basis.size()) != R->arity()) return false;
  Poly det = freediv::determinant(saitoMatrix(), R);
  if (det != determinant || det != divisorEquation * unitFactor) return false;
  for (const auto& b : basis)
    if (!is_logarithmic(b, divisorEquation)) return false;
  return true;
}

std::optional<FreeDivisorCertificate> certify_basis(const std::vector<VectorField>& fields, const Poly& f,
                                                    const std::vector<Provenance>& provenance) {
  if (fields.empty()) return std::nullopt;
  const RingPtr& R = fields[0].ring;
  if (int(fields.size()) != R->arity()) return std::nullopt;
  for (const auto& b : fields)
    if (!is_logarithmic(b, f)) return std::nullopt;
  FreeDivisorCertificate c;
  c.basis = fields;
  c.provenance = provenance;
  c.provenance.resize(fields.size(), Provenance::Direct);
  c.divisorEquation = f;
  c.determinant = determinant(c.saitoMatrix(), R);
  auto u = unit_multiple_eq(c.determinant, f);
  if (!u || sgn(*u) == 0) return std::nullopt;
  c.unitFactor = *u;
  return c;
}

// ---------------------------------------------------------------------------

RingPtr reweighted(const RingPtr& ring, const std::vector<int>& weights) {
  if (weights == ring->weights()) return ring;
  return PolyRing::make(ring->vars(), weights, ring->orderSpec());
}

Poly rering(const Poly& p, const RingPtr& ring) {
  if (same_ring(p.ring(), ring)) return p;
  std::vector<int> id(ring->arity());
  for (int i = 0; i < ring->arity(); ++i) id[i] = i;
  return change_ring(p, ring, id);
}

namespace {

bool allHomogeneous(const std::vector<Poly>& polys, const std::vector<int>& w) {
  for (const auto& p : polys)
    if (!p.isZero() && !weighted_degree(p, w).homogeneous) return false;
  return true;
}

std::optional<std::vector<int>> toPositiveInts(const std::vector<Rational>& v) {
  Integer den = 1, num = 0;
  for (const auto& x : v) {
    if (sgn(x) <= 0) return std::nullopt;
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  }
  std::vector<Integer> ints;
  for (const auto& x : v) {
    Integer i = x.get_num() * (den / x.get_den());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), i.get_mpz_t());
    ints.push_back(i);
  }
  std::vector<int> out;
  for (auto& i : ints) {
    i /= num;
    if (!i.fits_sint_p() || i > 10000) return std::nullopt;
    out.push_back(int(i.get_si()));
  }
  return out;
}

}  // namespace

std::optional<std::vector<int>> find_weights(const std::vector<Poly>& polys, const RingPtr& ring) {
  int n = ring->arity();
  if (n == 0) return std::vector<int>{};
  if (ring->positiveWeights() && allHomogeneous(polys, ring->weights())) return ring->weights();
  std::vector<int> ones(n, 1);
  if (allHomogeneous(polys, ones)) return ones;
  QMatrix A;
  for (const auto& p : polys) {
    if (p.isZero()) continue;
    const Monomial& m0 = p.terms()[0].m;
    for (std::size_t k = 1; k < p.size(); ++k) {
      std::vector<Rational> row(n);
      for (int i = 0; i < n; ++i) row[i] = int(p.terms()[k].m.e[i]) - int(m0.e[i]);
      A.push_back(std::move(row));
    }
  }
  auto basis = nullspace(A, n);
  if (basis.empty()) return std::nullopt;
  auto combo = [&](const std::vector<long>& c) {
    std::vector<Rational> v(n, 0);
    for (std::size_t b = 0; b < basis.size(); ++b)
      for (int i = 0; i < n; ++i) v[i] += basis[b][i] * c[b];
    return v;
  };
  std::vector<long> c(basis.size(), 1);
  if (auto w = toPositiveInts(combo(c))) return w;
  for (std::size_t b = 0; b < basis.size(); ++b) {
    std::vector<long> e(basis.size(), 0);
    e[b] = 1;
    if (auto w = toPositiveInts(combo(e))) return w;
    e[b] = -1;
    if (auto w = toPositiveInts(combo(e))) return w;
  }
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<long> dist(-6, 6);
  for (int trial = 0; trial < 2000; ++trial) {
    for (auto& x : c) x = dist(rng);
    if (auto w = toPositiveInts(combo(c))) return w;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

ModulePresentation derlog_hypersurface(const Poly& f, const EngineOptions& opts) {
  if (f.isZero()) throw Error("derlog of the zero polynomial");
  const RingPtr& R = f.ring();
  int n = R->arity();
  auto wd = weighted_degree(f, R->gradingWeights());
  int d = wd.homogeneous ? int(wd.degree) : 0;
  std::vector<std::vector<Poly>> grad;
  std::vector<int> colDeg;
  for (int i = 0; i < n; ++i) {
    grad.push_back({differentiate(f, i)});
    colDeg.push_back(-R->gradingWeights()[i]);
  }
  ModulePresentation A(R, 1, grad, {-d});
  if (wd.homogeneous) A = A.withColumnDegrees(colDeg);
  ModulePresentation B(R, 1, {{f}}, {-d});
  ModulePresentation K = kernel_of_map(A, B, opts);
  if (!wd.homogeneous) return K;
  return K.withRowDegrees(colDeg);
}

ModulePresentation derlog_ideal(const ModulePresentation& I, const EngineOptions& opts) {
  if (I.rank() != 1) throw Error("derlog_ideal expects an ideal presentation");
  const RingPtr& R = I.ring();
  int n = R->arity();
  std::vector<Poly> gens;
  for (const auto& col : I.columns())
    if (!col[0].isZero()) gens.push_back(col[0]);
  int k = int(gens.size());
  if (k == 0) {
    // Every field preserves the zero ideal.
    return fields_module(R, [&] {
      std::vector<VectorField> fs;
      for (int i = 0; i < n; ++i) {
        VectorField v = VectorField::zero(R);
        v.coeffs[i] = Poly::constant(R, 1);
        fs.push_back(v);
      }
      return fs;
    }());
  }
  bool graded = true;
  std::vector<int> rowDeg(k, 0);
  for (int j = 0; j < k; ++j) {
    auto wd = weighted_degree(gens[j], R->gradingWeights());
    if (!wd.homogeneous) graded = false;
    rowDeg[j] = -int(wd.degree);
  }
  if (!graded) rowDeg.assign(k, 0);
  std::vector<std::vector<Poly>> jac(n, std::vector<Poly>(k));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < k; ++j) jac[i][j] = differentiate(gens[j], i);
  ModulePresentation A(R, k, jac, rowDeg);
  if (graded) {
    std::vector<int> cd(n);
    for (int i = 0; i < n; ++i) cd[i] = -R->gradingWeights()[i];
    A = A.withColumnDegrees(cd);
  }
  std::vector<std::vector<Poly>> mult;
  for (int j = 0; j < k; ++j)
    for (int l = 0; l < k; ++l) {
      std::vector<Poly> col(k, Poly(R));
      col[j] = gens[l];
      mult.push_back(std::move(col));
    }
  ModulePresentation B(R, k, mult, rowDeg);
  return kernel_of_map(A, B, opts);
}

ModulePresentation singular_locus_ideal(const Poly& f) {
  if (f.isZero()) throw Error("singular locus of the zero polynomial");
  std::vector<Poly> gens;
  for (int i = 0; i < f.ring()->arity(); ++i) {
    Poly d = differentiate(f, i);
    if (!d.isZero()) gens.push_back(d);
  }
  gens.push_back(f);
  return ModulePresentation::ideal(f.ring(), gens);
}

namespace {

std::vector<VectorField> mapFields(const std::vector<VectorField>& fs, const RingPtr& R) {
  std::vector<VectorField> out;
  for (const auto& f : fs) {
    std::vector<Poly> c;
    for (const auto& p : f.coeffs) c.push_back(rering(p, R));
    out.emplace_back(R, std::move(c));
  }
  return out;
}

ModulePresentation mapModule(const ModulePresentation& M, const RingPtr& R) {
  std::vector<std::vector<Poly>> cols;
  for (const auto& col : M.columns()) {
    std::vector<Poly> c;
    for (const auto& p : col) c.push_back(rering(p, R));
    cols.push_back(std::move(c));
  }
  return ModulePresentation(R, M.rank(), std::move(cols), M.rowDegrees());
}

}  // namespace

FreenessResult is_free_saito(const Poly& f, const CheckOptions& opts) {
  if (f.isZero()) throw Error("is_free_saito: zero polynomial");
  FreenessResult res;
  const RingPtr& R0 = f.ring();
  int n = R0->arity();
  Poly g = f.normalized();
  auto w = find_weights({g}, R0);
  if (!w && !opts.allowNonhomogeneous)
    throw NotGraded("divisor equation is not quasi-homogeneous; the override flag is required");
  Poly sf = squarefree_part(g);
  if (!unit_multiple_eq(sf, g)) {
    res.notices.push_back("input is not reduced; replaced by its squarefree part " + sf.str());
    g = sf;
  }
  RingPtr R = w ? reweighted(R0, *w) : R0;
  if (!w) res.notices.push_back("no quasi-homogeneous grading: result is global, not germ-certified");
  Poly gr = rering(g, R);
  ModulePresentation D = derlog_hypersurface(gr, opts.engine);
  res.derlog = mapModule(D, R0);
  std::vector<VectorField> fields = mapFields(module_fields(D), R0);
  int count = int(fields.size());
  if (count == n) {
    if (auto c = certify_basis(fields, g, std::vector<Provenance>(n, Provenance::Direct))) {
      c->globalOnly = !w;
      res.certificate = std::move(c);
    } else {
      res.notFree = NotFree{count, n, "determinant of the generators is not a unit multiple of f"};
    }
    return res;
  }
  if (!w && count > n) {
    auto subs = subsets(count, n);
    if (subs.size() <= 5000) {
      for (const auto& s : subs) {
        std::vector<VectorField> pick;
        for (int i : s) pick.push_back(fields[i]);
        if (auto c = certify_basis(pick, g, std::vector<Provenance>(n, Provenance::Direct))) {
          c->globalOnly = true;
          res.certificate = std::move(c);
          return res;
        }
      }
    }
    res.notFree = NotFree{count, n, "no subset of the generators has determinant a unit multiple of f"};
    return res;
  }
  res.notFree = NotFree{count, n, "minimal generating set has " + std::to_string(count) + " elements, rank is " +
                                      std::to_string(n)};
  return res;
}

bool is_free_aleksandrov(const Poly& f, const CheckOptions& opts) {
  if (f.isZero()) throw Error("is_free_aleksandrov: zero polynomial");
  const RingPtr& R0 = f.ring();
  int n = R0->arity();
  auto w = find_weights({f}, R0);
  if (!w && !opts.allowNonhomogeneous)
    throw NotGraded("divisor equation is not quasi-homogeneous; the override flag is required");
  RingPtr R = w ? reweighted(R0, *w) : R0;
  ModulePresentation J = singular_locus_ideal(rering(f, R));
  int dim = krull_dim(J, opts.engine);
  if (dim < 0) return true;
  if (n - dim < 2) return false;
  if (w) return projective_dimension(J, opts.engine) <= 2;
  // Without grading: length of a pruned syzygy chain, an upper bound.
  ModulePresentation cur = prune_generators(J, opts.engine);
  int len = 1;
  while (true) {
    ModulePresentation S = syzygies(cur, opts.engine);
    if (S.compact().numColumns() == 0) break;
    ++len;
    cur = S;
    if (len > 2) return false;
  }
  return len <= 2;
}

bool is_suspended(const Poly& f, const EngineOptions& opts) {
  if (f.isZero()) throw Error("is_suspended: zero polynomial");
  auto w = find_weights({f}, f.ring());
  RingPtr R = w ? reweighted(f.ring(), *w) : f.ring();
  ModulePresentation D = derlog_hypersurface(rering(f, R), opts);
  for (const auto& col : D.columns())
    for (const auto& p : col)
      if (sgn(p.constantTerm()) != 0) return true;
  return false;
}

}  // namespace freediv
