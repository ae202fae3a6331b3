#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "qcover/vertex_set.hpp"

namespace qcover {

/// Stable 1-based facet identifier, assigned after canonical sorting.
struct FacetId {
  std::uint32_t value = 0;

  friend constexpr auto operator<=>(FacetId, FacetId) = default;
};

std::string to_string(FacetId id);

/// A simplicial complex presented by its facets.
///
/// Facets are sorted lexicographically on their sorted vertex lists and then
/// numbered F1..Fm, so two inputs listing the same facets in a different order
/// produce identical complexes. Labels must cover 1..n with n <= 64.
/// Instances are immutable and cheap to copy (shared storage).
class SimplicialComplex {
 public:
  /// Validates and canonicalizes. Throws Error with EmptyInput, EmptyFacet,
  /// InvalidVertex, RepeatedVertex, TooManyVertices, DuplicateFacet,
  /// AntichainViolation or UncoveredVertex.
  static SimplicialComplex from_facets(std::vector<std::vector<Vertex>> facets);

  int vertex_count() const { return data_->vertex_count; }
  int facet_count() const { return static_cast<int>(data_->facets.size()); }

  const std::vector<Vertex>& facet(FacetId id) const;
  VertexSet mask(FacetId id) const;
  bool has_facet(FacetId id) const { return id.value >= 1 && id.value <= data_->facets.size(); }
  std::vector<FacetId> facet_ids() const;
  const std::vector<std::vector<Vertex>>& facets() const { return data_->facets; }

  int dimension() const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.data_ == b.data_ || a.data_->facets == b.data_->facets;
  }

 private:
  struct Data {
    int vertex_count = 0;
    std::vector<std::vector<Vertex>> facets;
    std::vector<VertexSet> masks;
  };

  explicit SimplicialComplex(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

/// Subcomplex generated by a nonempty subset of a parent's facets.
///
/// Vertex labels are those of the parent; the vertex universe is the union of
/// the selected facets. A SimplicialComplex converts implicitly to the SMD of
/// all its facets, so every algorithm in this library is written once against
/// this type.
class SmdSubcomplex {
 public:
  // NOLINTNEXTLINE(google-explicit-constructor)
  SmdSubcomplex(const SimplicialComplex& complex);

  /// Throws EmptySelection or UnknownFacetId. Duplicate ids are merged.
  SmdSubcomplex(const SimplicialComplex& parent, std::vector<FacetId> ids);

  const SimplicialComplex& parent() const { return parent_; }
  /// Length of cover vectors: the parent's label range.
  int vertex_count() const { return parent_.vertex_count(); }
  int facet_count() const { return static_cast<int>(ids_.size()); }
  /// Selected ids in increasing order.
  const std::vector<FacetId>& facet_ids() const { return ids_; }
  bool contains(FacetId id) const;
  VertexSet mask(FacetId id) const;
  const std::vector<Vertex>& facet(FacetId id) const { return parent_.facet(id); }
  VertexSet universe() const { return universe_; }

  /// Same parent, one facet fewer. Throws UnknownFacetId or EmptySelection.
  SmdSubcomplex without(FacetId id) const;

  /// Materializes the selected facets as a standalone complex. Labels are kept
  /// when they stay dense, otherwise compacted in increasing order.
  SimplicialComplex to_complex() const;

 private:
  SimplicialComplex parent_;
  std::vector<FacetId> ids_;
  VertexSet universe_;
};

SmdSubcomplex smd(const SimplicialComplex& complex, std::vector<FacetId> ids);

int dimension(const SmdSubcomplex& complex);

/// Connectivity of the facet graph, where facets are adjacent when they share
/// a vertex.
bool is_connected(const SmdSubcomplex& complex);

}  // namespace qcover
