#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "qcover/complex.hpp"
#include "qcover/cycles.hpp"
#include "qcover/quasi_forest.hpp"

namespace qcover {

/// Exponent vector a (a[v-1] is the weight of vertex v) together with a
/// declared order k; stands for the monomial x^a t^k of the vertex cover
/// algebra. Vectors always span the parent's full label range; on an SMD the
/// weights of vertices outside the subcomplex must be zero.
struct CoverVector {
  std::vector<int> a;
  int k = 0;

  friend auto operator<=>(const CoverVector&, const CoverVector&) = default;
};

/// a = b.a + c.a and k = b.k + c.k with both parts nonzero.
struct Decomposition {
  CoverVector b;
  CoverVector c;
};

/// min over facets F of the weight of F. Throws LengthMismatch when
/// a.size() != vertex_count(), InvalidArgument for negative weights or for
/// weight outside an SMD's vertex universe.
int cover_order(const SmdSubcomplex& complex, std::span<const int> a);

bool is_k_cover(const SmdSubcomplex& complex, std::span<const int> a, int k);

/// Searches b over the box 0 <= b <= a in lexicographic order, skipping 0 and
/// a, and returns the first split with order(b) + order(a - b) >= k. The b
/// part gets order min(order(b), k), the rest goes to c. nullopt means a is
/// indecomposable. Throws NotAKCover.
std::optional<Decomposition> decompose(const SmdSubcomplex& complex, std::span<const int> a, int k);

inline bool is_indecomposable(const SmdSubcomplex& complex, std::span<const int> a, int k) {
  return !decompose(complex, a, k).has_value();
}

/// All indecomposable k-covers, sorted lexicographically by weights.
///
/// For k >= 1 only minimal k-covers are candidates (lowering any positive
/// weight by one breaks the cover): a non-minimal a splits as
/// (a - e_v, k) + (e_v, 0). This also bounds every weight by k. For k = 0
/// the candidates are the unit vectors; the zero vector is the unit of the
/// algebra, not a generator, and is never reported. Every candidate is
/// confirmed through decompose().
std::vector<CoverVector> indecomposable_covers(const SmdSubcomplex& complex, int k);

/// Result of a bounded search for the top generator degree.
struct DegreeReport {
  /// Largest k <= k_max with an indecomposable k-cover. Degrees above k_max
  /// were not examined, so this is a lower bound on d(A) unless the caller
  /// knows more.
  int d = 0;
  int k_max = 0;
  /// Number of indecomposable k-covers for each k in 1..k_max.
  std::map<int, std::size_t> counts;
  /// One generator per realized degree (see d_max for the choice).
  std::map<int, CoverVector> certificates;
};

/// Enumerates generators in degrees 1..k_max. The certificate for degree k
/// is the generator with the largest support, ties broken by the
/// lexicographically largest weight vector. Throws InvalidArgument for
/// k_max < 1.
DegreeReport d_max(const SmdSubcomplex& complex, int k_max);

/// Lifts a k-cover c of `reduced` (= `full` minus the leaf `leaf`) to `full`
/// by putting weight max(0, k - c(leaf)) on the smallest free vertex of the
/// leaf, where c(leaf) is the weight c already gives the leaf. A full weight
/// of k would make the lift decomposable whenever c(leaf) > 0. Weights are
/// copied by label; c may be shorter than full.vertex_count(). Throws NotALeaf
/// when `leaf` is not a leaf of `full`, InvalidArgument when the facets of
/// `reduced` are not those of `full` minus `leaf`, NotAKCover when c is not a
/// k-cover of `reduced`, NoFreeVertex if the leaf has no free vertex.
CoverVector extend_cover_by_leaf(const SmdSubcomplex& reduced, const SmdSubcomplex& full, FacetId leaf,
                                 const CoverVector& c);

/// Indecomposable 2-cover of a quasi-tree built from a special odd cycle.
///
/// Starts with the 0/1 indicator of the cycle's vertices on the subcomplex
/// spanned by the minimal subtree of `tree` around the cycle's facets, then
/// re-attaches the remaining facets one leaf at a time through
/// extend_cover_by_leaf, which tops each one up to weight 2.
/// The result is checked with decompose() before it is returned.
/// Throws NotQuasiTree, NotSpecialOddCycle, InvalidArgument (tree nodes are
/// not the facets of `complex`) or VerificationFailed.
CoverVector witness_cover_from_cycle(const SmdSubcomplex& complex, const RelationTree& tree, const Cycle& cycle);

}  // namespace qcover
