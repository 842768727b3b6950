#pragma once

#include <optional>
#include <string>
#include <vector>

#include "freediv/groebner.hpp"
#include "freediv/matrix.hpp"
#include "freediv/poly.hpp"

namespace freediv {

struct CheckOptions {
  EngineOptions engine;
  bool allowNonhomogeneous = false;
};

// Sum of coeffs[i] * d/dx_i.
struct VectorField {
  RingPtr ring;
  std::vector<Poly> coeffs;

  VectorField() = default;
  VectorField(RingPtr ring, std::vector<Poly> coeffs);
  static VectorField zero(const RingPtr& ring);
  static VectorField euler(const RingPtr& ring, const std::vector<int>& weights);
  static VectorField fromColumn(const RingPtr& ring, const std::vector<Poly>& col) { return {ring, col}; }

  bool isZero() const;
  VectorField operator+(const VectorField& o) const;
  VectorField operator-(const VectorField& o) const;
  VectorField operator*(const Poly& p) const;
  bool operator==(const VectorField& o) const { return coeffs == o.coeffs; }
  std::string str() const;
};

Poly apply_field(const VectorField& eta, const Poly& p);
// Lie bracket [a, b].
VectorField bracket(const VectorField& a, const VectorField& b);
ModulePresentation fields_module(const RingPtr& ring, const std::vector<VectorField>& fields,
                                 std::vector<int> rowDegrees = {});
std::vector<VectorField> module_fields(const ModulePresentation& M);

enum class Provenance { Vertical, Lifted, Direct };
std::string provenance_name(Provenance p);

struct FreeDivisorCertificate {
  std::vector<VectorField> basis;
  std::vector<Provenance> provenance;
  Poly determinant;
  Rational unitFactor;
  Poly divisorEquation;
  // Set when freeness was decided without a quasi-homogeneous grading.
  bool globalOnly = false;

  // Row i holds the coefficients of d/dx_i; column j is basis field j.
  PolyMatrix saitoMatrix() const;
  // det = unitFactor * divisorEquation and every column is logarithmic.
  bool verify() const;
};

struct NotFree {
  int generatorCount = 0;
  int arity = 0;
  std::string reason;
};

struct FreenessResult {
  std::optional<FreeDivisorCertificate> certificate;
  std::optional<NotFree> notFree;
  std::vector<std::string> notices;
  // Generators of Der(-log f) that were examined.
  std::optional<ModulePresentation> derlog;
  bool free() const { return certificate.has_value(); }
};

// Saito's criterion for an explicit list of fields.
std::optional<FreeDivisorCertificate> certify_basis(const std::vector<VectorField>& fields, const Poly& f,
                                                    const std::vector<Provenance>& provenance);
bool is_logarithmic(const VectorField& eta, const Poly& f);

ModulePresentation derlog_hypersurface(const Poly& f, const EngineOptions& opts = {});
ModulePresentation derlog_ideal(const ModulePresentation& I, const EngineOptions& opts = {});
ModulePresentation singular_locus_ideal(const Poly& f);
FreenessResult is_free_saito(const Poly& f, const CheckOptions& opts = {});
bool is_free_aleksandrov(const Poly& f, const CheckOptions& opts = {});
bool is_suspended(const Poly& f, const EngineOptions& opts = {});

// Positive integer weights making every polynomial in each group weighted
// homogeneous (each polynomial separately), preferring the ring's own weights.
std::optional<std::vector<int>> find_weights(const std::vector<Poly>& polys, const RingPtr& ring);
// The ring with the same variables and order kind but different weights.
RingPtr reweighted(const RingPtr& ring, const std::vector<int>& weights);
Poly rering(const Poly& p, const RingPtr& ring);

}  // namespace freediv
