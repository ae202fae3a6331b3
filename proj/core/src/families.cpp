#include "qcover/families.hpp"

#include <algorithm>
#include <numeric>

#include "qcover/error.hpp"
#include "qcover/random.hpp"

namespace qcover {

SimplicialComplex delta_n(int n) {
  if (n < 3) throw Error(ErrorCode::NTooSmall, "Δn is defined for n >= 3, got " + std::to_string(n));
  if (2 * n > kMaxVertices) throw Error(ErrorCode::TooManyVertices, "Δn needs 2n <= 64 vertices");
  std::vector<std::vector<Vertex>> facets;
  std::vector<Vertex> center(static_cast<std::size_t>(n));
  std::iota(center.begin(), center.end(), 1);
  facets.push_back(center);
  for (Vertex i = 1; i <= n; ++i) {
    std::vector<Vertex> f;
    for (Vertex v = 1; v <= n; ++v) {
      if (v != i) f.push_back(v);
    }
    f.push_back(n + i);
    facets.push_back(std::move(f));
  }
  return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex figure1() {
  return SimplicialComplex::from_facets({{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {2, 3, 6}, {2, 3, 7}});
}

SimplicialComplex random_quasi_tree(const GeneratorSeed& g) {
  if (g.num_facets < 1) throw Error(ErrorCode::InvalidArgument, "num_facets must be at least 1");
  if (g.max_facet_size < 1) throw Error(ErrorCode::InvalidArgument, "max_facet_size must be at least 1");

  Rng rng(g.seed);
  const int max_size = g.num_facets > 1 ? std::max(2, g.max_facet_size) : g.max_facet_size;
  const int min_size = std::min(2, max_size);

  std::vector<std::vector<Vertex>> facets;
  Vertex used = 0;
  auto fresh_labels = [&](int count, std::vector<Vertex>& into) {
    for (int i = 0; i < count; ++i) into.push_back(++used);
  };

  // Every later facet needs one fresh vertex; the cap leaves room for them.
  auto room = [&](int facets_left) { return g.max_vertices - used - facets_left; };
  std::vector<Vertex> first;
  const int first_max = g.max_vertices > 0 ? std::clamp(room(g.num_facets - 1), min_size, max_size) : max_size;
  fresh_labels(uniform_int(rng, min_size, first_max), first);
  facets.push_back(std::move(first));

  for (int f = 1; f < g.num_facets; ++f) {
    const int size = uniform_int(rng, 2, max_size);
    std::vector<Vertex> branch = facets[uniform_below(rng, facets.size())];
    const int shared = uniform_int(rng, 1, std::min<int>(static_cast<int>(branch.size()) - 1, size - 1));
    int fresh = size - shared;
    if (g.max_vertices > 0) fresh = std::min(fresh, std::max(1, room(g.num_facets - f - 1)));

    // Partial Fisher-Yates picks the shared part of the branch.
    for (int i = 0; i < shared; ++i) {
      const auto j = static_cast<std::size_t>(i) + uniform_below(rng, branch.size() - static_cast<std::size_t>(i));
      std::swap(branch[static_cast<std::size_t>(i)], branch[j]);
    }
    std::vector<Vertex> facet(branch.begin(), branch.begin() + shared);
    fresh_labels(fresh, facet);
    facets.push_back(std::move(facet));
  }

  std::vector<Vertex> relabel(static_cast<std::size_t>(used));
  std::iota(relabel.begin(), relabel.end(), 1);
  for (std::size_t i = relabel.size(); i > 1; --i) std::swap(relabel[i - 1], relabel[uniform_below(rng, i)]);
  for (auto& facet : facets) {
    for (Vertex& v : facet) v = relabel[static_cast<std::size_t>(v - 1)];
  }
  return SimplicialComplex::from_facets(std::move(facets));
}

}  // namespace qcover
