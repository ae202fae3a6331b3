#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "qcover/complex.hpp"
#include "qcover/covers.hpp"
#include "qcover/cycles.hpp"
#include "qcover/quasi_forest.hpp"

namespace qcover {

enum class VerdictMethod { Criterion, BruteForce, Both };

std::string_view to_string(VerdictMethod method) noexcept;

struct Verdict {
  bool standard_graded = true;
  std::optional<Cycle> cycle_witness;
  std::optional<CoverVector> cover_witness;
  VerdictMethod method = VerdictMethod::Criterion;
  /// Set when the answer only covers degrees up to this bound.
  std::optional<int> bound_used;
};

/// Quasi-trees only: A(Δ) is standard graded exactly when Δ has no special
/// odd cycle. A negative answer carries the cycle and the 2-cover built from
/// it along a relation tree (default leaf order, branches chosen by `rule`).
/// Throws NotQuasiTree; use brute_force_verdict for other complexes.
Verdict is_standard_graded(const SmdSubcomplex& complex, const BranchRule& rule = BranchRule::smallest(),
                           std::uint64_t budget = kDefaultSearchBudget);

/// Looks for an indecomposable k-cover with 2 <= k <= k_max. Works on any
/// complex; a positive answer only speaks for degrees up to k_max.
/// Throws InvalidArgument for k_max < 2.
Verdict brute_force_verdict(const SmdSubcomplex& complex, int k_max);

struct CrossValidation {
  Verdict criterion;
  Verdict brute_force;
  bool agree = false;
};

/// Runs both procedures on a quasi-tree. For k_max >= 2 they must agree: a
/// special odd cycle yields an indecomposable 2-cover, and without one the
/// algebra is standard graded. Throws NotQuasiTree.
CrossValidation cross_validate(const SmdSubcomplex& complex, int k_max,
                               const BranchRule& rule = BranchRule::smallest(),
                               std::uint64_t budget = kDefaultSearchBudget);

struct SmdFinding {
  std::vector<FacetId> facets;
  Verdict verdict;
};

/// Brute-force verdict on every SMD of the complex; reports the ones that are
/// not standard graded within k_max. Exponential in the number of facets;
/// throws InvalidArgument above 16 facets.
std::vector<SmdFinding> smd_sweep(const SmdSubcomplex& complex, int k_max);

}  // namespace qcover
