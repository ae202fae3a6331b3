#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qcover/complex.hpp"

namespace qcover {

/// v1, F1, v2, F2, ..., vs, Fs, v1 with vi, v(i+1) ∈ Fi.
struct Cycle {
  std::vector<Vertex> vertices;
  std::vector<FacetId> facets;

  std::size_t length() const { return vertices.size(); }
  bool is_odd() const { return vertices.size() % 2 == 1; }
  VertexSet vertex_set() const { return VertexSet::of(vertices); }

  friend bool operator==(const Cycle&, const Cycle&) = default;
};

/// Start the cycle at vertices[k] (same orientation).
Cycle rotated(const Cycle& cycle, std::size_t k);
/// v1, Fs, vs, F(s-1), ..., v2, F1.
Cycle reversed(const Cycle& cycle);

/// Distinct vertices, distinct facets of the complex, s >= 2 and the
/// incidences vi, v(i+1) ∈ Fi. Throws LengthMismatch on unequal lengths.
bool is_cycle(const SmdSubcomplex& complex, std::span<const Vertex> vertices, std::span<const FacetId> facets);
bool is_cycle(const SmdSubcomplex& complex, const Cycle& cycle);

/// Every facet of the cycle meets the cycle's vertex set in at most two
/// vertices. Only the cycle's own facets F1..Fs are inspected: a facet of the
/// complex outside the cycle may contain more cycle vertices (the central
/// facet {1,..,n} of Δn does). Throws NotACycle.
bool is_special(const SmdSubcomplex& complex, const Cycle& cycle);

inline constexpr std::uint64_t kDefaultSearchBudget = 10'000'000;

/// Exhaustive backtracking for a special cycle of odd length s >= 3.
///
/// Cycles are generated in canonical form only: v1 is the smallest cycle
/// vertex and v2 < vs. The first hit in (vertex, FacetId) lexicographic order
/// is returned. Throws BudgetExceeded after `budget` node expansions.
std::optional<Cycle> find_special_odd_cycle(const SmdSubcomplex& complex,
                                            std::uint64_t budget = kDefaultSearchBudget);

/// All cycles with 2 <= s <= max_length, special or not, in the same
/// canonical form (for s = 2, F1 < F2). Throws BudgetExceeded.
std::vector<Cycle> enumerate_cycles(const SmdSubcomplex& complex, std::size_t max_length,
                                    std::uint64_t budget = kDefaultSearchBudget);

}  // namespace qcover
