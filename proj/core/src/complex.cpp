#include "qcover/complex.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qcover/error.hpp"

namespace qcover {
namespace {

std::string format_facet(const std::vector<Vertex>& facet) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < facet.size(); ++i) out << (i ? "," : "") << facet[i];
  out << '}';
  return out.str();
}

}  // namespace

std::string to_string(FacetId id) { return "F" + std::to_string(id.value); }

SimplicialComplex SimplicialComplex::from_facets(std::vector<std::vector<Vertex>> facets) {
  if (facets.empty()) throw Error(ErrorCode::EmptyInput, "a complex needs at least one facet");

  int max_label = 0;
  for (auto& facet : facets) {
    if (facet.empty()) throw Error(ErrorCode::EmptyFacet, "facets must be nonempty");
    for (Vertex v : facet) {
      if (v <= 0) throw Error(ErrorCode::InvalidVertex, "vertex labels must be positive, got " + std::to_string(v));
      if (v > kMaxVertices) {
        throw Error(ErrorCode::TooManyVertices,
                    "label " + std::to_string(v) + " exceeds the supported maximum of " + std::to_string(kMaxVertices));
      }
      max_label = std::max(max_label, v);
    }
    std::sort(facet.begin(), facet.end());
    if (std::adjacent_find(facet.begin(), facet.end()) != facet.end()) {
      throw Error(ErrorCode::RepeatedVertex, "facet " + format_facet(facet) + " repeats a vertex");
    }
  }

  std::sort(facets.begin(), facets.end());
  if (auto dup = std::adjacent_find(facets.begin(), facets.end()); dup != facets.end()) {
    throw Error(ErrorCode::DuplicateFacet, "facet " + format_facet(*dup) + " is listed twice");
  }

  auto data = std::make_shared<Data>();
  data->vertex_count = max_label;
  data->masks.reserve(facets.size());
  for (const auto& facet : facets) data->masks.push_back(VertexSet::of(facet));

  for (std::size_t i = 0; i < facets.size(); ++i) {
    for (std::size_t j = 0; j < facets.size(); ++j) {
      if (i != j && data->masks[i].subset_of(data->masks[j])) {
        throw Error(ErrorCode::AntichainViolation,
                    format_facet(facets[i]) + " is contained in " + format_facet(facets[j]));
      }
    }
  }

  VertexSet covered;
  for (VertexSet m : data->masks) covered = covered | m;
  VertexSet missing = VertexSet::range(max_label) - covered;
  if (!missing.empty()) {
    throw Error(ErrorCode::UncoveredVertex,
                "vertex " + std::to_string(missing.min()) + " lies in no facet (labels must cover 1.." +
                    std::to_string(max_label) + ")");
  }

  data->facets = std::move(facets);
  return SimplicialComplex(std::move(data));
}

const std::vector<Vertex>& SimplicialComplex::facet(FacetId id) const {
  if (!has_facet(id)) throw Error(ErrorCode::UnknownFacetId, to_string(id));
  return data_->facets[id.value - 1];
}

VertexSet SimplicialComplex::mask(FacetId id) const {
  if (!has_facet(id)) throw Error(ErrorCode::UnknownFacetId, to_string(id));
  return data_->masks[id.value - 1];
}

std::vector<FacetId> SimplicialComplex::facet_ids() const {
  std::vector<FacetId> ids(data_->facets.size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = FacetId{static_cast<std::uint32_t>(i + 1)};
  return ids;
}

int SimplicialComplex::dimension() const { return qcover::dimension(*this); }

SmdSubcomplex::SmdSubcomplex(const SimplicialComplex& complex)
    : parent_(complex), ids_(complex.facet_ids()), universe_(VertexSet::range(complex.vertex_count())) {}

SmdSubcomplex::SmdSubcomplex(const SimplicialComplex& parent, std::vector<FacetId> ids)
    : parent_(parent), ids_(std::move(ids)) {
  if (ids_.empty()) throw Error(ErrorCode::EmptySelection, "an SMD needs at least one facet");
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  for (FacetId id : ids_) universe_ = universe_ | parent_.mask(id);
}

bool SmdSubcomplex::contains(FacetId id) const { return std::binary_search(ids_.begin(), ids_.end(), id); }

VertexSet SmdSubcomplex::mask(FacetId id) const {
  if (!contains(id)) throw Error(ErrorCode::UnknownFacetId, to_string(id) + " is not part of this subcomplex");
  return parent_.mask(id);
}

SmdSubcomplex SmdSubcomplex::without(FacetId id) const {
  if (!contains(id)) throw Error(ErrorCode::UnknownFacetId, to_string(id) + " is not part of this subcomplex");
  std::vector<FacetId> rest;
  std::copy_if(ids_.begin(), ids_.end(), std::back_inserter(rest), [id](FacetId f) { return f != id; });
  return SmdSubcomplex(parent_, std::move(rest));
}

SimplicialComplex SmdSubcomplex::to_complex() const {
  std::vector<int> relabel(static_cast<std::size_t>(vertex_count()) + 1, 0);
  int next = 0;
  for (Vertex v : universe_.to_vector()) relabel[static_cast<std::size_t>(v)] = ++next;
  const bool dense = universe_ == VertexSet::range(universe_.max());

  std::vector<std::vector<Vertex>> facets;
  for (FacetId id : ids_) {
    std::vector<Vertex> f = parent_.facet(id);
    if (!dense) {
      for (Vertex& v : f) v = relabel[static_cast<std::size_t>(v)];
    }
    facets.push_back(std::move(f));
  }
  return SimplicialComplex::from_facets(std::move(facets));
}

SmdSubcomplex smd(const SimplicialComplex& complex, std::vector<FacetId> ids) {
  return SmdSubcomplex(complex, std::move(ids));
}

int dimension(const SmdSubcomplex& complex) {
  int best = 0;
  for (FacetId id : complex.facet_ids()) best = std::max(best, complex.mask(id).size());
  return best - 1;
}

bool is_connected(const SmdSubcomplex& complex) {
  const auto& ids = complex.facet_ids();
  VertexSet reached = complex.mask(ids.front());
  std::vector<bool> seen(ids.size(), false);
  seen[0] = true;
  std::size_t count = 1;
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (!seen[i] && complex.mask(ids[i]).intersects(reached)) {
        seen[i] = true;
        reached = reached | complex.mask(ids[i]);
        ++count;
        grew = true;
      }
    }
  }
  return count == ids.size();
}

}  // namespace qcover
