#pragma once

#include <climits>
#include <optional>
#include <utility>
#include <vector>

#include "freediv/groebner.hpp"
#include "freediv/logvf.hpp"

namespace freediv {

// Codimension reported for the unit ideal (empty zero set).
inline constexpr int kInfiniteCodim = INT_MAX;

// Jac(phi) * xi = eta o phi.
struct LiftWitness {
  VectorField eta;
  VectorField xi;
  std::vector<Poly> residual;
  bool exact() const;
};

// m x n matrix with entry (j, i) = d phi_j / d x_i; columns are the images
// of d/dx_i. Graded (row shifts -deg phi_j, column degrees -w_i) when every
// component is weighted homogeneous for the source weights.
ModulePresentation jacobian(const PolyMap& phi);
// Source weights making every component weighted homogeneous, and the
// resulting component degrees (zero components get degree 1).
std::optional<std::pair<std::vector<int>, std::vector<int>>> find_map_weights(const PolyMap& phi);
// phi with source and target rings reweighted.
PolyMap reweighted_map(const PolyMap& phi, const std::vector<int>& sourceWeights,
                       const std::vector<int>& targetWeights);
// phi reweighted by find_map_weights when possible, otherwise phi.
PolyMap graded_map(const PolyMap& phi);

// Generators of ker Jac(phi).
ModulePresentation vertical_fields(const PolyMap& phi, const EngineOptions& opts = {});
// Presentation of coker Jac(phi), over the source ring regraded by graded_map.
ModulePresentation t1_presentation(const PolyMap& phi);
// coker(M) is zero, or has projective dimension <= 2 and support of codimension >= 2.
bool cm_codim2(const ModulePresentation& M, const EngineOptions& opts = {});

// Reusable lifting against one Jacobian.
class Lifter {
 public:
  explicit Lifter(const PolyMap& phi, const EngineOptions& opts = {});
  std::optional<LiftWitness> lift(const VectorField& eta) const;
  const PolyMap& map() const { return phi_; }

 private:
  PolyMap phi_;
  MembershipSolver solver_;
};

std::optional<LiftWitness> lift_field(const PolyMap& phi, const VectorField& eta, const EngineOptions& opts = {});
// eta o phi, componentwise.
std::vector<Poly> compose_field(const VectorField& eta, const PolyMap& phi);
// Jac(phi) * xi.
std::vector<Poly> push_forward(const PolyMap& phi, const VectorField& xi);

// Liftable target fields, computed by elimination in the graph ring.
ModulePresentation liftable_module(const PolyMap& phi, const EngineOptions& opts = {});

// Presentation of coker [Jac(phi) | (w_1 phi_1, ..., w_m phi_m)], regraded as for T1.
ModulePresentation euler_module_N(const PolyMap& phi, const std::vector<int>& weights);

struct MultiweightModule {
  ModulePresentation presentation;
  // Some component of phi is zero.
  bool degenerate = false;
};
// Presentation of coker [Jac(phi) | A] with one column of A per weighting:
// column k holds weightMatrix[j][k] * phi_j in row j.
MultiweightModule multiweight_module(const PolyMap& phi, const std::vector<std::vector<int>>& weightMatrix);
// Normal crossings pattern: A = diag(phi_1, ..., phi_m).
MultiweightModule normal_crossings_module(const PolyMap& phi);

// Codimension in the source of the ideal generated by the pulled back
// generators; kInfiniteCodim for the unit ideal.
int preimage_codim(const PolyMap& phi, const ModulePresentation& I, const EngineOptions& opts = {});

}  // namespace freediv
