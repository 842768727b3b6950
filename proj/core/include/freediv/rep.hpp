#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "freediv/logvf.hpp"
#include "freediv/matrix.hpp"

namespace freediv {

// A Lie algebra action by linear vector fields on the ring's coordinates.
struct LinearRep {
  std::string name;
  RingPtr ring;
  std::vector<VectorField> fields;

  int dim() const { return ring->arity(); }
  // Every coefficient is a linear form (or zero).
  bool isLinear() const;
};

// Coordinates x{i}{j} of M_{n,m}, row-major (x{i}_{j} when n or m exceeds 9).
RingPtr matrix_ring(int n, int m, const std::string& prefix = "x");
// Coordinates {prefix}{i}{j}, i <= j, of symmetric m x m matrices.
RingPtr symmetric_ring(int m, const std::string& prefix = "s");
// Coordinates {prefix}{i}{j}, i < j, of skew-symmetric m x m matrices.
RingPtr skew_ring(int m, const std::string& prefix = "s");
// Generic symmetric / skew matrix over such a ring.
PolyMatrix symmetric_matrix(const RingPtr& R, int m);
PolyMatrix skew_matrix(const RingPtr& R, int m);
PolyMatrix generic_matrix(const RingPtr& R, int n, int m);

// sl_n acting on M_{n,m} from the left.
LinearRep sl_left(int n, int m, const std::string& prefix = "x");
// The standard representation of sl_2 on x, y: e = x d/dy, f = y d/dx, h = x d/dx - y d/dy.
LinearRep sl2_standard();
// so_n acting on symmetric n x n matrices by C -> AC - CA.
LinearRep so_sym2(int n, const std::string& prefix = "x");
// so_n acting on M_{n,m} from the left.
LinearRep o_left(int n, int m, const std::string& prefix = "x");
// sp_n (n even, form [[0, I], [-I, 0]]) acting on M_{n,m} from the left.
LinearRep sp_left(int n, int m, const std::string& prefix = "x");
// The induced action on degree-k forms, coordinates z_a for the monomials of
// degree k in the base variables (z0..zk, z_i <-> x^{k-i} y^i for two variables).
LinearRep sym_power(const LinearRep& base, int k, const std::string& prefix = "z");
// Action of the direct sum of the algebras on the tensor product.
LinearRep tensor(const LinearRep& a, const LinearRep& b, const std::string& prefix = "t");
// gl_m acting on symmetric matrices by C -> E_ij C + C E_ij^T.
LinearRep gl_conj_symm(int m, const std::string& prefix = "s");
// gl_m acting on skew matrices by C -> E_ij C + C E_ij^T.
LinearRep gl_conj_skew(int m, const std::string& prefix = "s");
// gl_m acting on M_{n,m} by B -> B E_ij^T.
LinearRep gl_right(int n, int m, const std::string& prefix = "x");
LinearRep custom_rep(const RingPtr& ring, std::vector<VectorField> fields, std::string name = "custom");

// The bracket of any two fields lies in the linear span of the fields.
bool bracket_closed(const LinearRep& rep);
// Dimension of the linear span of the fields.
int algebra_dim(const LinearRep& rep);

// Basis of the degree-d polynomials annihilated by every field.
std::vector<Poly> invariants_of_degree(const LinearRep& rep, int d);
bool verify_invariants(const LinearRep& rep, const std::vector<Poly>& polys);

struct StabilizerResult {
  int dim = 0;
  std::uint64_t seed = 0;
};
// dim g minus the generic rank of the action, from three random points.
StabilizerResult stabilizer_dim(const LinearRep& rep, std::uint64_t seed = 1);

// N - 2 if the degrees sum to N, else N - 1.
int predict_t1_dim(int N, const std::vector<int>& degrees);

// {sum b_i x_i : b in K}, K the syzygies of the transposed field matrix.
ModulePresentation invariant_ideal_via_kernel(const LinearRep& rep, const EngineOptions& opts = {});

enum class QuotientKind { CastlingMinors, SymMatrix, SkewForm, CharpolyCoeffs, SubPfaffians, Explicit };

struct QuotientMap {
  QuotientKind kind = QuotientKind::Explicit;
  LinearRep rep;
  PolyMap map;
  std::vector<int> degrees;
  // verify_invariants succeeded against rep; false when not applicable.
  bool verified = false;
  std::string note;
};

// castling_minors: {n}; sym_matrix, skew_form: {n, m}; charpoly_coeffs: {n};
// sub_pfaffians: {m}. The target ring is weighted by the invariant degrees.
QuotientMap build_quotient_map(QuotientKind kind, const std::vector<int>& params);
QuotientMap explicit_quotient_map(const LinearRep& rep, const std::vector<Poly>& invariants,
                                  const std::string& targetPrefix = "s");

// Jac(phi) applied to the Euler field: (deg f_j) * f_j.
std::vector<Poly> invariants_via_euler(const QuotientMap& q);
// Jac(phi) xi = eta o phi for each pair (index into repX, index into repS).
bool equivariance_check(const PolyMap& phi, const LinearRep& repX, const LinearRep& repS,
                        const std::vector<std::pair<int, int>>& pairing);

// Sub-Pfaffians P_i (row and column i deleted) of the generic skew m x m matrix, m odd.
std::vector<Poly> sub_pfaffians(const RingPtr& skewRing, int m);
// Fields xi_ij in the span of gl_conj_skew(m) with xi_ij(P_k) = delta_ik P_j;
// empty when some xi_ij does not exist.
std::vector<std::vector<VectorField>> pfaffian_relation_fields(int m);

}  // namespace freediv
