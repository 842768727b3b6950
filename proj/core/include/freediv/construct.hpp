#pragma once

#include <optional>
#include <string>
#include <vector>

#include "freediv/lift.hpp"
#include "freediv/logvf.hpp"

namespace freediv {

enum class HypothesisStatus { Pass, Fail, Skipped };
std::string status_name(HypothesisStatus s);

struct Hypothesis {
  std::string name;
  HypothesisStatus status = HypothesisStatus::Skipped;
  std::string evidence;
};

struct PipelineReport {
  std::string construction;
  std::vector<Hypothesis> hypotheses;
  std::optional<FreeDivisorCertificate> certificate;
  std::optional<std::string> failure;
  bool budgetExceeded = false;
  std::vector<std::string> notes;
  // Divisor equation produced by the construction (before certification).
  std::optional<Poly> divisor;
  std::vector<LiftWitness> lifts;
  // Further divisors produced alongside the main one.
  std::vector<PipelineReport> variants;

  bool success() const { return certificate.has_value() && !failure; }
  bool allPassed() const;
  const Hypothesis* find(const std::string& name) const;
};

enum class PullbackMode { Strong, Weak };

// Hypothesis names used in reports.
namespace hyp {
inline const std::string kTargetFree = "f free";
inline const std::string kNonzero = "pullback nonzero";
inline const std::string kVerticalFree = "vertical fields free";
inline const std::string kLiftable = "Der(-log f) liftable";
inline const std::string kPreimageCodim = "preimage of singular locus has codimension 2";
inline const std::string kT1 = "T1 Cohen-Macaulay of codimension 2";
inline const std::string kWeighted = "f weighted homogeneous";
inline const std::string kN = "N Cohen-Macaulay of codimension 2";
inline const std::string kEulerContainment = "Der(-log f) in liftable + Euler";
inline const std::string kPullbackFree = "pullback free";
inline const std::string kIdealCM = "ideal Cohen-Macaulay of codimension 2";
inline const std::string kIdealContainment = "Der(-log h) in Der(-log I)";
inline const std::string kNotSuspended = "f not suspended";
}  // namespace hyp

PipelineReport pullback_main(const PolyMap& phi, const Poly& f, PullbackMode mode, const CheckOptions& opts = {});
PipelineReport euler_variant(const PolyMap& phi, const Poly& f, const std::vector<int>& weights,
                             const CheckOptions& opts = {});

// h * (g_1 y_1 + ... + g_k y_k) on the ring of h extended by newVars.
PipelineReport ffstar(const Poly& h, const std::vector<Poly>& g, const std::vector<std::string>& newVars,
                      const CheckOptions& opts = {});
// As above with new variables y1, ..., yk.
PipelineReport ffstar(const Poly& h, const std::vector<Poly>& g, const CheckOptions& opts = {});
// ffstar with g = (dh/dx_1, ..., dh/dx_m, h); adds the variant without h
// when h lies in its Jacobian ideal.
PipelineReport ffstar_canonical(const Poly& h, const CheckOptions& opts = {});

// Signed maximal minors Delta_i = (-1)^i * (minor deleting column i) of the
// generic n x (n+1) matrix, as a map M_{n,n+1} -> C^{n+1} with target `target`.
PolyMap castling_map(int n, const RingPtr& target);
// Fields of the left action of sl_n on M_{n,k}.
std::vector<VectorField> sl_left_fields(const RingPtr& matrixRing, int n, int k);
// Closed-form lift of s_p d/ds_q along castling_map.
VectorField castling_lift(const PolyMap& phi, int n, int p, int q);
PipelineReport castling(const Poly& f, int n, const CheckOptions& opts = {});

// sum_i (-1)^i d_i d/dx_i, d_i the minor of Jac(phi) deleting column i.
VectorField eta_generator(const PolyMap& phi, const EngineOptions& opts = {});

}  // namespace freediv
