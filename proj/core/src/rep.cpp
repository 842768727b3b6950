#include "freediv/rep.hpp"

#include <map>
#include <random>

#include "freediv/construct.hpp"
#include "freediv/error.hpp"
#include "freediv/lift.hpp"

namespace freediv {

bool LinearRep::isLinear() const {
  for (const auto& f : fields)
    for (const auto& c : f.coeffs)
      for (const auto& t : c.terms())
        if (t.m.totalDegree() != 1) return false;
  return true;
}

namespace {

std::string pair_name(const std::string& prefix, int i, int j, int bound) {
  if (bound <= 9) return prefix + std::to_string(i) + std::to_string(j);
  return prefix + std::to_string(i) + "_" + std::to_string(j);
}

// Coefficient vector (row-major N x N) of a linear field.
std::vector<Rational> linear_vector(const VectorField& v) {
  int N = v.ring->arity();
  std::vector<Rational> out(std::size_t(N) * N, 0);
  for (int i = 0; i < N; ++i)
    for (const auto& t : v.coeffs[i].terms()) {
      if (t.m.totalDegree() != 1) throw Error("representation field is not linear");
      int j = 0;
      while (t.m.e[j] == 0) ++j;
      out[std::size_t(i) * N + j] = t.c;
    }
  return out;
}

PolyMatrix constant_matrix(const RingPtr& R, const std::vector<std::vector<Rational>>& A) {
  PolyMatrix M(A.size(), std::vector<Poly>(A.empty() ? 0 : A[0].size()));
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = 0; j < A[i].size(); ++j) M[i][j] = Poly::constant(R, A[i][j]);
  return M;
}

std::vector<std::vector<Rational>> elementary(int n, int i, int j) {
  std::vector<std::vector<Rational>> E(n, std::vector<Rational>(n, 0));
  E[i][j] = 1;
  return E;
}

// Field X -> A X on M_{n,m}.
VectorField left_field(const RingPtr& R, int n, int m, const std::vector<std::vector<Rational>>& A) {
  PolyMatrix X = generic_matrix(R, n, m);
  PolyMatrix AX = matmul(constant_matrix(R, A), X, R);
  VectorField v = VectorField::zero(R);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) v.coeffs[i * m + j] = AX[i][j];
  return v;
}

PolyMatrix add(const PolyMatrix& A, const PolyMatrix& B) {
  PolyMatrix C = A;
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = 0; j < A[i].size(); ++j) C[i][j] = A[i][j] + B[i][j];
  return C;
}

// Field C -> E C + C E^T on symmetric or skew matrices.
VectorField conj_field(const RingPtr& R, int m, bool skew, const std::vector<std::vector<Rational>>& E) {
  PolyMatrix C = skew ? skew_matrix(R, m) : symmetric_matrix(R, m);
  PolyMatrix Em = constant_matrix(R, E);
  PolyMatrix D = add(matmul(Em, C, R), matmul(C, transpose(Em), R));
  VectorField v = VectorField::zero(R);
  int k = 0;
  for (int p = 0; p < m; ++p)
    for (int q = skew ? p + 1 : p; q < m; ++q) v.coeffs[k++] = D[p][q];
  return v;
}

std::vector<Monomial> monomials_of_degree(int nvars, int d) {
  std::vector<Monomial> out;
  Monomial cur;
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == nvars - 1) {
      cur.e[var] = uint16_t(left);
      Monomial m = cur;
      m.refresh();
      out.push_back(m);
      cur.e[var] = 0;
      return;
    }
    for (int a = left; a >= 0; --a) {
      cur.e[var] = uint16_t(a);
      self(self, var + 1, left - a);
    }
    cur.e[var] = 0;
  };
  if (nvars == 0) return d == 0 ? std::vector<Monomial>{Monomial{}} : out;
  rec(rec, 0, d);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

RingPtr matrix_ring(int n, int m, const std::string& prefix) {
  if (n < 1 || m < 1) throw Error("matrix_ring: dimensions must be positive");
  std::vector<std::string> vars;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= m; ++j) vars.push_back(pair_name(prefix, i, j, std::max(n, m)));
  return PolyRing::make(vars);
}

RingPtr symmetric_ring(int m, const std::string& prefix) {
  if (m < 1) throw Error("symmetric_ring: size must be positive");
  std::vector<std::string> vars;
  for (int i = 1; i <= m; ++i)
    for (int j = i; j <= m; ++j) vars.push_back(pair_name(prefix, i, j, m));
  return PolyRing::make(vars);
}

RingPtr skew_ring(int m, const std::string& prefix) {
  if (m < 2) throw Error("skew_ring: size must be at least 2");
  std::vector<std::string> vars;
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) vars.push_back(pair_name(prefix, i, j, m));
  return PolyRing::make(vars);
}

PolyMatrix generic_matrix(const RingPtr& R, int n, int m) {
  if (R->arity() != n * m) throw Error("generic_matrix: ring is not M_{n,m}");
  PolyMatrix A(n, std::vector<Poly>(m));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) A[i][j] = Poly::variable(R, i * m + j);
  return A;
}

PolyMatrix symmetric_matrix(const RingPtr& R, int m) {
  if (R->arity() != m * (m + 1) / 2) throw Error("symmetric_matrix: wrong ring size");
  PolyMatrix A(m, std::vector<Poly>(m));
  int k = 0;
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      A[i][j] = Poly::variable(R, k++);
      A[j][i] = A[i][j];
    }
  return A;
}

PolyMatrix skew_matrix(const RingPtr& R, int m) {
  if (R->arity() != m * (m - 1) / 2) throw Error("skew_matrix: wrong ring size");
  PolyMatrix A(m, std::vector<Poly>(m, Poly(R)));
  int k = 0;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      A[i][j] = Poly::variable(R, k++);
      A[j][i] = -A[i][j];
    }
  return A;
}

LinearRep sl_left(int n, int m, const std::string& prefix) {
  if (n < 2) throw Error("sl_left: n must be at least 2");
  RingPtr R = matrix_ring(n, m, prefix);
  return {"sl_left(" + std::to_string(n) + "," + std::to_string(m) + ")", R, sl_left_fields(R, n, m)};
}

LinearRep sl2_standard() {
  RingPtr R = PolyRing::make({"x", "y"});
  Poly x = Poly::variable(R, 0), y = Poly::variable(R, 1);
  return {"sl2", R, {VectorField(R, {Poly(R), x}), VectorField(R, {y, Poly(R)}), VectorField(R, {x, -y})}};
}

LinearRep so_sym2(int n, const std::string& prefix) {
  if (n < 2) throw Error("so_sym2: n must be at least 2");
  RingPtr R = symmetric_ring(n, prefix);
  PolyMatrix C = symmetric_matrix(R, n);
  std::vector<VectorField> fields;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      auto A = elementary(n, i, j);
      A[j][i] = -1;
      PolyMatrix Am = constant_matrix(R, A);
      PolyMatrix AC = matmul(Am, C, R), CA = matmul(C, Am, R);
      VectorField v = VectorField::zero(R);
      int k = 0;
      for (int p = 0; p < n; ++p)
        for (int q = p; q < n; ++q) v.coeffs[k++] = AC[p][q] - CA[p][q];
      fields.push_back(v);
    }
  return {"so_sym2(" + std::to_string(n) + ")", R, fields};
}

LinearRep o_left(int n, int m, const std::string& prefix) {
  if (n < 2) throw Error("o_left: n must be at least 2");
  RingPtr R = matrix_ring(n, m, prefix);
  std::vector<VectorField> fields;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      auto A = elementary(n, i, j);
      A[j][i] = -1;
      fields.push_back(left_field(R, n, m, A));
    }
  return {"o_left(" + std::to_string(n) + "," + std::to_string(m) + ")", R, fields};
}

LinearRep sp_left(int n, int m, const std::string& prefix) {
  if (n < 2 || n % 2) throw Error("sp_left: n must be even and positive");
  RingPtr R = matrix_ring(n, m, prefix);
  int h = n / 2;
  std::vector<std::vector<Rational>> W(n, std::vector<Rational>(n, 0));
  for (int i = 0; i < h; ++i) {
    W[i][h + i] = 1;
    W[h + i][i] = -1;
  }
  // A^T W + W A = 0 in the n^2 entries of A.
  QMatrix eqs;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      std::vector<Rational> row(std::size_t(n) * n, 0);
      for (int r = 0; r < n; ++r) {
        row[std::size_t(r) * n + p] += W[r][q];
        row[std::size_t(r) * n + q] += W[p][r];
      }
      eqs.push_back(row);
    }
  std::vector<VectorField> fields;
  for (const auto& b : nullspace(eqs, n * n)) {
    std::vector<std::vector<Rational>> A(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) A[i][j] = b[std::size_t(i) * n + j];
    fields.push_back(left_field(R, n, m, A));
  }
  return {"sp_left(" + std::to_string(n) + "," + std::to_string(m) + ")", R, fields};
}

LinearRep sym_power(const LinearRep& base, int k, const std::string& prefix) {
  if (k < 1) throw Error("sym_power: degree must be positive");
  int b = base.ring->arity();
  auto mons = monomials_of_degree(b, k);
  std::vector<std::string> vars;
  for (std::size_t a = 0; a < mons.size(); ++a) vars.push_back(prefix + std::to_string(a));
  RingPtr R = PolyRing::make(vars);
  std::unordered_map<Monomial, int, MonomialHash> index;
  for (std::size_t a = 0; a < mons.size(); ++a) index[mons[a]] = int(a);
  std::vector<VectorField> fields;
  for (const auto& D : base.fields) {
    VectorField v = VectorField::zero(R);
    for (std::size_t a = 0; a < mons.size(); ++a) {
      Poly img = apply_field(D, Poly::monomial(base.ring, mons[a]));
      for (const auto& t : img.terms()) {
        auto it = index.find(t.m);
        if (it == index.end()) throw Error("sym_power: base field is not linear");
        v.coeffs[a] += Poly::variable(R, it->second) * t.c;
      }
    }
    fields.push_back(v);
  }
  return {"sym_power(" + base.name + "," + std::to_string(k) + ")", R, fields};
}

LinearRep tensor(const LinearRep& a, const LinearRep& b, const std::string& prefix) {
  int na = a.dim(), nb = b.dim();
  std::vector<std::string> vars;
  for (int i = 1; i <= na; ++i)
    for (int j = 1; j <= nb; ++j) vars.push_back(pair_name(prefix, i, j, std::max(na, nb)));
  RingPtr R = PolyRing::make(vars);
  auto t = [&](int i, int j) { return Poly::variable(R, i * nb + j); };
  std::vector<VectorField> fields;
  for (const auto& f : a.fields) {
    auto M = linear_vector(f);
    VectorField v = VectorField::zero(R);
    for (int i = 0; i < na; ++i)
      for (int j = 0; j < na; ++j)
        if (sgn(M[std::size_t(i) * na + j]))
          for (int k = 0; k < nb; ++k) v.coeffs[i * nb + k] += t(j, k) * M[std::size_t(i) * na + j];
    fields.push_back(v);
  }
  for (const auto& f : b.fields) {
    auto M = linear_vector(f);
    VectorField v = VectorField::zero(R);
    for (int k = 0; k < nb; ++k)
      for (int l = 0; l < nb; ++l)
        if (sgn(M[std::size_t(k) * nb + l]))
          for (int i = 0; i < na; ++i) v.coeffs[i * nb + k] += t(i, l) * M[std::size_t(k) * nb + l];
    fields.push_back(v);
  }
  return {"tensor(" + a.name + "," + b.name + ")", R, fields};
}

LinearRep gl_conj_symm(int m, const std::string& prefix) {
  RingPtr R = symmetric_ring(m, prefix);
  std::vector<VectorField> fields;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) fields.push_back(conj_field(R, m, false, elementary(m, i, j)));
  return {"gl_conj_symm(" + std::to_string(m) + ")", R, fields};
}

LinearRep gl_conj_skew(int m, const std::string& prefix) {
  RingPtr R = skew_ring(m, prefix);
  std::vector<VectorField> fields;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) fields.push_back(conj_field(R, m, true, elementary(m, i, j)));
  return {"gl_conj_skew(" + std::to_string(m) + ")", R, fields};
}

LinearRep gl_right(int n, int m, const std::string& prefix) {
  RingPtr R = matrix_ring(n, m, prefix);
  std::vector<VectorField> fields;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      VectorField v = VectorField::zero(R);
      for (int p = 0; p < n; ++p) v.coeffs[p * m + i] = Poly::variable(R, p * m + j);
      fields.push_back(v);
    }
  return {"gl_right(" + std::to_string(n) + "," + std::to_string(m) + ")", R, fields};
}

LinearRep custom_rep(const RingPtr& ring, std::vector<VectorField> fields, std::string name) {
  for (const auto& f : fields) require_same_ring(f.ring, ring, "custom_rep");
  LinearRep r{std::move(name), ring, std::move(fields)};
  if (!r.isLinear()) throw Error("custom_rep: fields must have linear coefficients");
  return r;
}

// ---------------------------------------------------------------------------

int algebra_dim(const LinearRep& rep) {
  QMatrix A;
  for (const auto& f : rep.fields) A.push_back(linear_vector(f));
  int N = rep.dim();
  return qrank(A, N * N);
}

bool bracket_closed(const LinearRep& rep) {
  QMatrix A;
  for (const auto& f : rep.fields) A.push_back(linear_vector(f));
  int N = rep.dim(), cols = N * N;
  int r = qrank(A, cols);
  for (std::size_t a = 0; a < rep.fields.size(); ++a)
    for (std::size_t b = a + 1; b < rep.fields.size(); ++b) {
      QMatrix B = A;
      B.push_back(linear_vector(bracket(rep.fields[a], rep.fields[b])));
      if (qrank(B, cols) != r) return false;
    }
  return true;
}

std::vector<Poly> invariants_of_degree(const LinearRep& rep, int d) {
  if (d < 1) throw Error("invariants_of_degree: degree must be positive");
  const RingPtr& R = rep.ring;
  auto mons = monomials_of_degree(R->arity(), d);
  // One equation per (field, monomial of the image).
  std::map<std::pair<std::size_t, std::vector<uint16_t>>, int> rowOf;
  std::vector<std::vector<std::pair<int, Rational>>> entries(mons.size());
  for (std::size_t f = 0; f < rep.fields.size(); ++f)
    for (std::size_t a = 0; a < mons.size(); ++a) {
      Poly img = apply_field(rep.fields[f], Poly::monomial(R, mons[a]));
      for (const auto& t : img.terms()) {
        std::vector<uint16_t> key(t.m.e.begin(), t.m.e.begin() + R->arity());
        int r = rowOf.try_emplace({f, key}, int(rowOf.size())).first->second;
        entries[a].push_back({r, t.c});
      }
    }
  QMatrix A(rowOf.size(), std::vector<Rational>(mons.size(), 0));
  for (std::size_t a = 0; a < mons.size(); ++a)
    for (const auto& [r, c] : entries[a]) A[r][a] += c;
  std::vector<Poly> out;
  for (const auto& v : nullspace(A, int(mons.size()))) {
    std::vector<Poly::Term> terms;
    for (std::size_t a = 0; a < mons.size(); ++a)
      if (sgn(v[a])) terms.push_back({mons[a], v[a]});
    out.push_back(Poly(R, std::move(terms)).normalized());
  }
  return out;
}

bool verify_invariants(const LinearRep& rep, const std::vector<Poly>& polys) {
  for (const auto& p : polys)
    for (const auto& f : rep.fields)
      if (!apply_field(f, rering(p, rep.ring)).isZero()) return false;
  return true;
}

StabilizerResult stabilizer_dim(const LinearRep& rep, std::uint64_t seed) {
  int N = rep.dim();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-10000, 10000);
  int best = 0;
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<Rational> pt(N);
    for (auto& x : pt) x = Rational(dist(rng));
    QMatrix A;
    for (const auto& f : rep.fields) {
      std::vector<Rational> row;
      for (const auto& c : f.coeffs) row.push_back(evaluate(c, pt));
      A.push_back(std::move(row));
    }
    best = std::max(best, qrank(A, N));
  }
  return {algebra_dim(rep) - best, seed};
}

int predict_t1_dim(int N, const std::vector<int>& degrees) {
  long sum = 0;
  for (int d : degrees) {
    if (d <= 0) throw Error("predict_t1_dim: degrees must be positive");
    sum += d;
  }
  return sum == N ? N - 2 : N - 1;
}

ModulePresentation invariant_ideal_via_kernel(const LinearRep& rep, const EngineOptions& opts) {
  const RingPtr& R = rep.ring;
  int N = R->arity(), k = int(rep.fields.size());
  std::vector<Poly> gens;
  if (k == 0) {
    for (int i = 0; i < N; ++i) gens.push_back(Poly::variable(R, i));
    return ModulePresentation::ideal(R, gens);
  }
  std::vector<std::vector<Poly>> cols(N, std::vector<Poly>(k));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < k; ++j) cols[i][j] = rep.fields[j].coeffs[i];
  ModulePresentation T(R, k, std::move(cols), std::vector<int>(k, -1));
  ModulePresentation K = syzygies(T.withColumnDegrees(std::vector<int>(N, -1)), opts);
  for (const auto& b : K.columns()) {
    Poly s(R);
    for (int i = 0; i < N; ++i) s += b[i] * Poly::variable(R, i);
    if (!s.isZero()) gens.push_back(s);
  }
  return trim(ModulePresentation::ideal(R, gens), opts);
}

// ---------------------------------------------------------------------------

namespace {

RingPtr target_ring(int m, const std::vector<int>& degrees, const std::string& prefix = "s") {
  std::vector<std::string> vars;
  for (int j = 1; j <= m; ++j) vars.push_back(prefix + std::to_string(j));
  return PolyRing::make(vars, degrees);
}

QuotientMap finish(QuotientKind kind, LinearRep rep, PolyMap map, std::vector<int> degrees, bool check) {
  QuotientMap q{kind, std::move(rep), std::move(map), std::move(degrees), false, ""};
  if (check) {
    q.verified = verify_invariants(q.rep, q.map.components);
    if (!q.verified) throw Error("quotient map components are not invariants of " + q.rep.name);
  }
  return q;
}

}  // namespace

std::vector<Poly> sub_pfaffians(const RingPtr& R, int m) {
  if (m < 3 || m % 2 == 0) throw Error("sub_pfaffians: m must be odd and at least 3");
  PolyMatrix A = skew_matrix(R, m);
  std::vector<Poly> out;
  for (int del = 0; del < m; ++del) {
    std::vector<int> idx;
    for (int i = 0; i < m; ++i)
      if (i != del) idx.push_back(i);
    out.push_back(pfaffian(submatrix(A, idx, idx), R));
  }
  return out;
}

QuotientMap build_quotient_map(QuotientKind kind, const std::vector<int>& params) {
  auto need = [&](std::size_t k) {
    if (params.size() != k) throw Error("build_quotient_map: expected " + std::to_string(k) + " parameters");
  };
  switch (kind) {
    case QuotientKind::CastlingMinors: {
      need(1);
      int n = params[0];
      std::vector<int> deg(n + 1, n);
      PolyMap phi = castling_map(n, target_ring(n + 1, deg));
      return finish(kind, sl_left(std::max(n, 2), n + 1), phi, deg, n >= 2);
    }
    case QuotientKind::SymMatrix:
    case QuotientKind::SkewForm: {
      need(2);
      int n = params[0], m = params[1];
      bool skew = kind == QuotientKind::SkewForm;
      LinearRep rep = skew ? sp_left(n, m) : o_left(n, m);
      RingPtr S = skew ? skew_ring(m) : symmetric_ring(m);
      S = reweighted(S, std::vector<int>(S->arity(), 2));
      PolyMatrix A = generic_matrix(rep.ring, n, m);
      PolyMatrix mid = A;
      if (skew) {
        std::vector<std::vector<Rational>> W(n, std::vector<Rational>(n, 0));
        for (int i = 0; i < n / 2; ++i) {
          W[i][n / 2 + i] = 1;
          W[n / 2 + i][i] = -1;
        }
        mid = matmul(constant_matrix(rep.ring, W), A, rep.ring);
      }
      PolyMatrix P = matmul(transpose(A), mid, rep.ring);
      std::vector<Poly> comps;
      for (int p = 0; p < m; ++p)
        for (int q = skew ? p + 1 : p; q < m; ++q) comps.push_back(P[p][q]);
      std::vector<int> deg(comps.size(), 2);
      return finish(kind, rep, PolyMap(rep.ring, S, comps), deg, true);
    }
    case QuotientKind::CharpolyCoeffs: {
      need(1);
      int n = params[0];
      LinearRep rep = so_sym2(n);
      PolyMatrix C = symmetric_matrix(rep.ring, n);
      std::vector<Poly> g(n + 1, Poly(rep.ring));
      for (int k = 1; k <= n; ++k) {
        for (const auto& s : subsets(n, k)) g[k] += determinant(submatrix(C, s, s), rep.ring);
        if (k % 2) g[k] = -g[k];
      }
      std::vector<Poly> comps;
      std::vector<int> deg;
      for (int k = n; k >= 1; --k) {
        comps.push_back(g[k]);
        deg.push_back(k);
      }
      return finish(kind, rep, PolyMap(rep.ring, target_ring(n, deg), comps), deg, true);
    }
    case QuotientKind::SubPfaffians: {
      need(1);
      int m = params[0];
      LinearRep rep = gl_conj_skew(m, "x");
      std::vector<int> deg(m, (m - 1) / 2);
      QuotientMap q = finish(kind, rep, PolyMap(rep.ring, target_ring(m, deg), sub_pfaffians(rep.ring, m)), deg,
                             false);
      q.note = "sub-Pfaffians generate an ideal; they are not invariants of the action";
      return q;
    }
    case QuotientKind::Explicit:
      throw Error("build_quotient_map: use explicit_quotient_map for explicit invariants");
  }
  throw Error("build_quotient_map: unknown kind");
}

QuotientMap explicit_quotient_map(const LinearRep& rep, const std::vector<Poly>& invariants,
                                  const std::string& targetPrefix) {
  std::vector<Poly> comps;
  std::vector<int> deg;
  for (const auto& p : invariants) {
    Poly q = rering(p, rep.ring);
    auto wd = weighted_degree(q, std::vector<int>(rep.dim(), 1));
    if (q.isZero() || !wd.homogeneous) throw Error("explicit quotient map: invariants must be homogeneous");
    comps.push_back(q);
    deg.push_back(int(wd.degree));
  }
  RingPtr S = target_ring(int(comps.size()), deg, targetPrefix);
  return finish(QuotientKind::Explicit, rep, PolyMap(rep.ring, S, comps), deg, true);
}

std::vector<Poly> invariants_via_euler(const QuotientMap& q) {
  const RingPtr& X = q.map.source;
  VectorField E = VectorField::euler(X, std::vector<int>(X->arity(), 1));
  for (const auto& c : q.map.components)
    if (!c.isZero() && !weighted_degree(c, std::vector<int>(X->arity(), 1)).homogeneous)
      throw NotGraded("invariants_via_euler: invariants must be homogeneous");
  return push_forward(q.map, E);
}

bool equivariance_check(const PolyMap& phi, const LinearRep& repX, const LinearRep& repS,
                        const std::vector<std::pair<int, int>>& pairing) {
  for (const auto& [a, b] : pairing) {
    if (a < 0 || b < 0 || a >= int(repX.fields.size()) || b >= int(repS.fields.size()))
      throw Error("equivariance_check: pairing index out of range");
    VectorField xi = repX.fields[a], eta = repS.fields[b];
    std::vector<Poly> xc, ec;
    for (const auto& c : xi.coeffs) xc.push_back(rering(c, phi.source));
    for (const auto& c : eta.coeffs) ec.push_back(rering(c, phi.target));
    if (push_forward(phi, VectorField(phi.source, xc)) != compose_field(VectorField(phi.target, ec), phi))
      return false;
  }
  return true;
}

std::vector<std::vector<VectorField>> pfaffian_relation_fields(int m) {
  LinearRep rep = gl_conj_skew(m, "x");
  const RingPtr& R = rep.ring;
  auto P = sub_pfaffians(R, m);
  int k = int(rep.fields.size());
  // images[a][l] = alpha_a(P_l)
  std::vector<std::vector<Poly>> images(k, std::vector<Poly>(m));
  std::map<std::pair<int, std::vector<uint16_t>>, int> rowOf;
  auto row = [&](int l, const Monomial& mono) {
    std::vector<uint16_t> key(mono.e.begin(), mono.e.begin() + R->arity());
    return rowOf.try_emplace({l, key}, int(rowOf.size())).first->second;
  };
  for (int a = 0; a < k; ++a)
    for (int l = 0; l < m; ++l) {
      images[a][l] = apply_field(rep.fields[a], P[l]);
      for (const auto& t : images[a][l].terms()) row(l, t.m);
    }
  for (int l = 0; l < m; ++l)
    for (const auto& t : P[l].terms())
      for (int l2 = 0; l2 < m; ++l2) row(l2, t.m);
  int nrows = int(rowOf.size());
  QMatrix A(nrows, std::vector<Rational>(k, 0));
  for (int a = 0; a < k; ++a)
    for (int l = 0; l < m; ++l)
      for (const auto& t : images[a][l].terms()) A[row(l, t.m)][a] += t.c;
  std::vector<std::vector<VectorField>> out(m, std::vector<VectorField>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      std::vector<Rational> b(nrows, 0);
      for (const auto& t : P[j].terms()) b[row(i, t.m)] += t.c;
      auto c = qsolve(A, b, k);
      if (!c) return {};
      VectorField v = VectorField::zero(R);
      for (int a = 0; a < k; ++a)
        if (sgn((*c)[a])) v = v + rep.fields[a] * Poly::constant(R, (*c)[a]);
      out[i][j] = v;
    }
  return out;
}

}  // namespace freediv
