#pragma once

#include <cstdint>

#include "qcover/complex.hpp"

namespace qcover {

/// Δn on 2n vertices: the central facet {1..n} and, for i = 1..n, the facet
/// {1..n} \ {i} ∪ {n+i}. Throws NTooSmall for n < 3 and TooManyVertices for
/// n > 32.
SimplicialComplex delta_n(int n);

/// The five-facet quasi-tree {1,2,3}, {1,2,4}, {1,2,5}, {2,3,6}, {2,3,7}.
SimplicialComplex figure1();

struct GeneratorSeed {
  std::uint64_t seed = 0;
  int num_facets = 1;
  int max_facet_size = 3;
  /// Cap on the vertex count; 0 means none. Each attached facet still brings
  /// at least one new vertex, so the cap holds whenever it is at least
  /// num_facets + 1.
  int max_vertices = 0;
};

/// Grows a quasi-tree one leaf at a time: a new facet shares a nonempty
/// proper subset of one existing facet (its future branch) and adds fresh
/// vertices. Facet sizes are drawn uniformly from 2..max_facet_size (a size
/// of 1 is only used for single-facet output), and labels are shuffled at
/// the end. Deterministic in `g`. Throws InvalidArgument for num_facets < 1
/// or max_facet_size < 1.
SimplicialComplex random_quasi_tree(const GeneratorSeed& g);

}  // namespace qcover
