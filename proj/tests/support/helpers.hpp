#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qcover/complex.hpp"

namespace testing_support {

inline oracle::Facets to_oracle(const qcover::SmdSubcomplex& complex) {
  oracle::Facets out;
  for (qcover::FacetId id : complex.facet_ids()) {
    const auto& f = complex.facet(id);
    out.emplace_back(f.begin(), f.end());
  }
  return out;
}

/// FacetId of the facet with exactly these vertices.
inline qcover::FacetId id_of(const qcover::SimplicialComplex& complex, std::vector<qcover::Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  for (qcover::FacetId id : complex.facet_ids()) {
    if (complex.facet(id) == vertices) return id;
  }
  throw std::invalid_argument("no such facet");
}

inline qcover::FacetId F(std::uint32_t value) { return qcover::FacetId{value}; }

/// `base` plus `extra` leaves, each made of a nonempty proper subset of a
/// random existing facet and one or two fresh vertices, staying within
/// `max_vertices` when possible. Special odd cycles of `base` survive.
inline qcover::SimplicialComplex grow_quasi_tree(const qcover::SimplicialComplex& base, std::mt19937_64& rng,
                                                  int extra, int max_vertices) {
  auto facets = base.facets();
  int used = base.vertex_count();
  for (int i = 0; i < extra; ++i) {
    auto branch = facets[rng() % facets.size()];
    std::shuffle(branch.begin(), branch.end(), rng);
    const std::size_t shared = 1 + rng() % (branch.size() - 1);
    std::vector<qcover::Vertex> leaf(branch.begin(), branch.begin() + static_cast<long>(shared));
    const int fresh = used + 2 <= max_vertices - (extra - i - 1) && rng() % 2 == 0 ? 2 : 1;
    for (int k = 0; k < fresh; ++k) leaf.push_back(++used);
    facets.push_back(std::move(leaf));
  }
  return qcover::SimplicialComplex::from_facets(std::move(facets));
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline std::filesystem::path golden_dir() { return std::filesystem::path(QCOVER_GOLDEN_DIR); }

}  // namespace testing_support
