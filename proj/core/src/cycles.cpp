#include "qcover/cycles.hpp"

#include <algorithm>

#include "qcover/error.hpp"

namespace qcover {
namespace {

class Budget {
 public:
  explicit Budget(std::uint64_t limit) : limit_(limit) {}

  void spend() {
    if (++used_ > limit_) {
      throw Error(ErrorCode::BudgetExceeded,
                  "cycle search exceeded " + std::to_string(limit_) + " node expansions");
    }
  }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

struct Path {
  std::vector<Vertex> vertices;
  std::vector<FacetId> facets;
  VertexSet on_path;
  VertexSet facet_union;
};

class SpecialOddSearch {
 public:
  SpecialOddSearch(const SmdSubcomplex& complex, std::uint64_t budget)
      : complex_(complex), ids_(complex.facet_ids()), budget_(budget) {}

  std::optional<Cycle> run() {
    for (Vertex start : complex_.universe().to_vector()) {
      path_ = Path{{start}, {}, VertexSet{}, VertexSet{}};
      path_.on_path.insert(start);
      if (extend()) return Cycle{path_.vertices, path_.facets};
    }
    return std::nullopt;
  }

 private:
  // Every chosen facet Fj must meet the final vertex set in exactly
  // {vj, v(j+1)}; both pruning rules below enforce that incrementally.
  bool extend() {
    budget_.spend();
    const Vertex first = path_.vertices.front();
    const Vertex current = path_.vertices.back();
    const std::size_t s = path_.vertices.size();
    for (FacetId f : ids_) {
      if (std::find(path_.facets.begin(), path_.facets.end(), f) != path_.facets.end()) continue;
      const VertexSet mask = complex_.mask(f);
      if (!mask.contains(current)) continue;
      const VertexSet seen = mask & path_.on_path;

      if (s >= 3 && s % 2 == 1 && seen.size() == 2 && mask.contains(first) && path_.vertices[1] < current) {
        path_.facets.push_back(f);
        return true;
      }
      if (seen.size() != 1) continue;

      const VertexSet fresh = mask - path_.on_path - path_.facet_union;
      for (Vertex next : fresh.to_vector()) {
        if (next < first) continue;
        path_.vertices.push_back(next);
        path_.facets.push_back(f);
        path_.on_path.insert(next);
        const VertexSet saved_union = path_.facet_union;
        path_.facet_union = path_.facet_union | mask;
        if (extend()) return true;
        path_.facet_union = saved_union;
        path_.on_path.erase(next);
        path_.facets.pop_back();
        path_.vertices.pop_back();
      }
    }
    return false;
  }

  const SmdSubcomplex& complex_;
  std::vector<FacetId> ids_;
  Budget budget_;
  Path path_;
};

class CycleEnumeration {
 public:
  CycleEnumeration(const SmdSubcomplex& complex, std::size_t max_length, std::uint64_t budget)
      : complex_(complex), ids_(complex.facet_ids()), max_length_(max_length), budget_(budget) {}

  std::vector<Cycle> run() {
    for (Vertex start : complex_.universe().to_vector()) {
      vertices_ = {start};
      facets_.clear();
      extend();
    }
    return std::move(found_);
  }

 private:
  void extend() {
    budget_.spend();
    const Vertex first = vertices_.front();
    const Vertex current = vertices_.back();
    const std::size_t s = vertices_.size();
    for (FacetId f : ids_) {
      if (std::find(facets_.begin(), facets_.end(), f) != facets_.end()) continue;
      const VertexSet mask = complex_.mask(f);
      if (!mask.contains(current)) continue;

      if (s >= 2 && mask.contains(first)) {
        const bool canonical = s == 2 ? facets_.front() < f : vertices_[1] < current;
        if (canonical) {
          found_.push_back(Cycle{vertices_, facets_});
          found_.back().facets.push_back(f);
        }
      }
      if (s == max_length_) continue;
      for (Vertex next : mask.to_vector()) {
        if (next <= first || std::find(vertices_.begin(), vertices_.end(), next) != vertices_.end()) continue;
        vertices_.push_back(next);
        facets_.push_back(f);
        extend();
        facets_.pop_back();
        vertices_.pop_back();
      }
    }
  }

  const SmdSubcomplex& complex_;
  std::vector<FacetId> ids_;
  std::size_t max_length_;
  Budget budget_;
  std::vector<Vertex> vertices_;
  std::vector<FacetId> facets_;
  std::vector<Cycle> found_;
};

}  // namespace

Cycle rotated(const Cycle& cycle, std::size_t k) {
  Cycle out = cycle;
  const std::size_t s = cycle.length();
  for (std::size_t i = 0; i < s; ++i) {
    out.vertices[i] = cycle.vertices[(i + k) % s];
    out.facets[i] = cycle.facets[(i + k) % s];
  }
  return out;
}

Cycle reversed(const Cycle& cycle) {
  Cycle out;
  const std::size_t s = cycle.length();
  for (std::size_t i = 0; i < s; ++i) {
    out.vertices.push_back(cycle.vertices[(s - i) % s]);
    out.facets.push_back(cycle.facets[s - 1 - i]);
  }
  return out;
}

bool is_cycle(const SmdSubcomplex& complex, std::span<const Vertex> vertices, std::span<const FacetId> facets) {
  if (vertices.size() != facets.size()) {
    throw Error(ErrorCode::LengthMismatch, "a cycle lists as many facets as vertices");
  }
  const std::size_t s = vertices.size();
  if (s < 2) return false;

  std::vector<Vertex> vs(vertices.begin(), vertices.end());
  std::vector<FacetId> fs(facets.begin(), facets.end());
  std::sort(vs.begin(), vs.end());
  std::sort(fs.begin(), fs.end());
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) return false;
  if (std::adjacent_find(fs.begin(), fs.end()) != fs.end()) return false;

  for (std::size_t i = 0; i < s; ++i) {
    if (!complex.contains(facets[i])) return false;
    const Vertex a = vertices[i];
    const Vertex b = vertices[(i + 1) % s];
    if (a < 1 || b < 1 || a > kMaxVertices || b > kMaxVertices) return false;
    const VertexSet mask = complex.mask(facets[i]);
    if (!mask.contains(a) || !mask.contains(b)) return false;
  }
  return true;
}

bool is_cycle(const SmdSubcomplex& complex, const Cycle& cycle) {
  return is_cycle(complex, cycle.vertices, cycle.facets);
}

bool is_special(const SmdSubcomplex& complex, const Cycle& cycle) {
  if (!is_cycle(complex, cycle)) throw Error(ErrorCode::NotACycle, "specialness is defined for cycles only");
  const VertexSet on_cycle = cycle.vertex_set();
  return std::all_of(cycle.facets.begin(), cycle.facets.end(),
                     [&](FacetId f) { return (complex.mask(f) & on_cycle).size() <= 2; });
}

std::optional<Cycle> find_special_odd_cycle(const SmdSubcomplex& complex, std::uint64_t budget) {
  return SpecialOddSearch(complex, budget).run();
}

std::vector<Cycle> enumerate_cycles(const SmdSubcomplex& complex, std::size_t max_length, std::uint64_t budget) {
  return CycleEnumeration(complex, max_length, budget).run();
}

}  // namespace qcover
