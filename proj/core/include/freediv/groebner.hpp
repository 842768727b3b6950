#pragma once

#include <chrono>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "freediv/poly.hpp"

namespace freediv {

struct EngineStats {
  long spairs = 0;
  long reductions = 0;
};

struct EngineOptions {
  // Maximum number of reduction steps per Groebner computation.
  long budget = 10'000'000;
  std::chrono::steady_clock::time_point deadline = std::chrono::steady_clock::time_point::max();
  // Accumulates counters across calls when set.
  EngineStats* stats = nullptr;

  static EngineOptions withTimeout(double seconds, long budget = 10'000'000);
};

struct GroebnerBasis;
namespace detail {
class Engine;
}

// Columns generate a submodule of the free module of rank `rank`.
class ModulePresentation {
 public:
  ModulePresentation() = default;
  ModulePresentation(RingPtr ring, int rank, std::vector<std::vector<Poly>> columns,
                     std::vector<int> rowDegrees = {});
  static ModulePresentation fromRows(RingPtr ring, const std::vector<std::vector<Poly>>& rows,
                                     std::vector<int> rowDegrees = {});
  static ModulePresentation ideal(RingPtr ring, std::vector<Poly> gens);
  static ModulePresentation identity(RingPtr ring, int n);

  const RingPtr& ring() const { return ring_; }
  int rank() const { return rank_; }
  int numColumns() const { return int(columns_.size()); }
  const std::vector<std::vector<Poly>>& columns() const { return columns_; }
  const std::vector<Poly>& column(int j) const { return columns_[j]; }
  const Poly& entry(int row, int col) const { return columns_[col][row]; }
  std::vector<std::vector<Poly>> rows() const;
  // Row shifts; zeros unless declared.
  const std::vector<int>& rowDegrees() const { return rowDegrees_; }
  // Column degrees when every column is homogeneous for the ring weights and
  // row shifts; zero columns get degree 0.
  std::optional<std::vector<int>> columnDegrees() const;
  bool isGraded() const { return columnDegrees().has_value(); }
  bool isZero() const;

  ModulePresentation withRowDegrees(std::vector<int> d) const;
  // Declares column degrees; used for zero columns, checked against the rest.
  ModulePresentation withColumnDegrees(std::vector<int> d) const;
  ModulePresentation withColumns(std::vector<std::vector<Poly>> cols) const;
  // Columns of this followed by columns of other.
  ModulePresentation concat(const ModulePresentation& other) const;
  // Drops zero columns.
  ModulePresentation compact() const;

  // Groebner basis of the column span, computed once and shared by copies.
  std::shared_ptr<const GroebnerBasis> groebner(const EngineOptions& opts = {}) const;

  std::string str() const;

 private:
  struct Cache {
    std::mutex mu;
    std::shared_ptr<const GroebnerBasis> gb;
  };
  RingPtr ring_;
  int rank_ = 0;
  std::vector<std::vector<Poly>> columns_;
  std::vector<int> rowDegrees_;
  std::vector<int> declaredColDegrees_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

// Reduced Groebner basis under term-over-position on the ring order.
struct GroebnerBasis {
  RingPtr ring;
  int rank = 0;
  std::vector<int> rowDegrees;
  std::vector<std::vector<Poly>> generators;
  std::shared_ptr<const detail::Engine> engine;
  EngineStats stats;

  // Every S-pair of the generators reduces to zero.
  bool selfCheck() const;
  // Leading monomials per component (component index, monomial).
  std::vector<std::pair<int, Monomial>> leadingTerms() const;
};

GroebnerBasis buchberger(const ModulePresentation& M, const EngineOptions& opts = {});
std::vector<Poly> normal_form(const std::vector<Poly>& v, const GroebnerBasis& G);
bool in_span(const std::vector<Poly>& v, const GroebnerBasis& G);

ModulePresentation syzygies(const ModulePresentation& M, const EngineOptions& opts = {});
ModulePresentation eliminate(const ModulePresentation& M, const std::vector<int>& varsToKill,
                             const EngineOptions& opts = {});
ModulePresentation kernel_of_map(const ModulePresentation& A, const ModulePresentation& B,
                                 const EngineOptions& opts = {});

// Krull dimension of R/I for a one-row presentation; -1 for the unit ideal.
int krull_dim(const ModulePresentation& I, const EngineOptions& opts = {});
// Krull dimension of coker(M); -1 for the zero module.
int module_dim(const ModulePresentation& M, const EngineOptions& opts = {});
// Codimension of the support of coker(M); INT_MAX for the zero module.
int module_codim(const ModulePresentation& M, const EngineOptions& opts = {});
// Pole order of the Hilbert series of coker(M) at t=1, for positively graded M.
std::optional<int> hilbert_dim(const ModulePresentation& M, const EngineOptions& opts = {});

struct Resolution {
  // Number of generators of coker(M) in a minimal presentation.
  int rank0 = 0;
  std::vector<int> degrees0;
  // differentials[k] maps F_{k+1} -> F_k.
  std::vector<ModulePresentation> differentials;
  bool zeroModule() const { return rank0 == 0; }
  int pdim() const { return zeroModule() ? -1 : int(differentials.size()); }
};
Resolution minimal_resolution(const ModulePresentation& M, const EngineOptions& opts = {});
int projective_dimension(const ModulePresentation& M, const EngineOptions& opts = {});

bool module_equal(const ModulePresentation& M, const ModulePresentation& N,
                  const EngineOptions& opts = {});
bool module_contains(const ModulePresentation& M, const ModulePresentation& N,
                     const EngineOptions& opts = {});

// Graded-minimal generating set (requires graded input).
ModulePresentation minimal_generators(const ModulePresentation& M, const EngineOptions& opts = {});
// Removes generators lying in the span of the others; works without grading.
ModulePresentation prune_generators(const ModulePresentation& M, const EngineOptions& opts = {});
// Graded-minimal when graded, pruned otherwise.
ModulePresentation trim(const ModulePresentation& M, const EngineOptions& opts = {});

// Solves M * c = v with tracked reduction coefficients.
class MembershipSolver {
 public:
  explicit MembershipSolver(const ModulePresentation& M, const EngineOptions& opts = {});
  ~MembershipSolver();
  std::optional<std::vector<Poly>> solve(const std::vector<Poly>& v) const;
  const ModulePresentation& module() const { return M_; }

 private:
  ModulePresentation M_;
  std::unique_ptr<detail::Engine> eng_;
};

}  // namespace freediv
