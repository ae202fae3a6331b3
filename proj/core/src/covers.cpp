#include "qcover/covers.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "qcover/error.hpp"

namespace qcover {
namespace {

void check_weights(const SmdSubcomplex& complex, std::span<const int> a) {
  if (static_cast<int>(a.size()) != complex.vertex_count()) {
    throw Error(ErrorCode::LengthMismatch, "weight vector has length " + std::to_string(a.size()) + ", expected " +
                                               std::to_string(complex.vertex_count()));
  }
  const VertexSet universe = complex.universe();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 0) throw Error(ErrorCode::InvalidArgument, "weights must be nonnegative");
    if (a[i] != 0 && !universe.contains(static_cast<Vertex>(i + 1))) {
      throw Error(ErrorCode::InvalidArgument,
                  "vertex " + std::to_string(i + 1) + " carries weight but is not in the subcomplex");
    }
  }
}

int facet_weight(const SmdSubcomplex& complex, FacetId f, std::span<const int> a) {
  int sum = 0;
  for (Vertex v : complex.facet(f)) sum += a[static_cast<std::size_t>(v - 1)];
  return sum;
}

int order_unchecked(const SmdSubcomplex& complex, std::span<const int> a) {
  int best = std::numeric_limits<int>::max();
  for (FacetId f : complex.facet_ids()) best = std::min(best, facet_weight(complex, f, a));
  return best;
}

// Facet incidence in dense local indices, shared by the box search and the
// enumeration.
struct Incidence {
  std::vector<FacetId> facets;
  std::vector<std::vector<int>> facets_of_vertex;  // indexed by label - 1
  std::vector<int> facet_size;

  explicit Incidence(const SmdSubcomplex& complex)
      : facets(complex.facet_ids()), facets_of_vertex(static_cast<std::size_t>(complex.vertex_count())) {
    for (std::size_t fi = 0; fi < facets.size(); ++fi) {
      const auto& verts = complex.facet(facets[fi]);
      facet_size.push_back(static_cast<int>(verts.size()));
      for (Vertex v : verts) facets_of_vertex[static_cast<std::size_t>(v - 1)].push_back(static_cast<int>(fi));
    }
  }
};

std::optional<Decomposition> decompose_unchecked(const SmdSubcomplex& complex, const Incidence& inc,
                                                 std::span<const int> a, int k) {
  const std::size_t m = inc.facets.size();
  std::vector<int> total(m, 0);
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    support.push_back(i);
    for (int f : inc.facets_of_vertex[i]) total[static_cast<std::size_t>(f)] += a[i];
  }
  if (support.empty()) return std::nullopt;

  // b and a - b are tested together, and b -> a - b reverses lexicographic
  // order, so the first valid b always lies in the first half of the box.
  constexpr std::uint64_t kNoLimit = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t box = 1;
  for (std::size_t i : support) {
    const auto side = static_cast<std::uint64_t>(a[i]) + 1;
    box = box > kNoLimit / side ? kNoLimit : box * side;
  }
  const std::uint64_t last_index = box == kNoLimit ? kNoLimit : (box - 1) / 2;

  std::vector<int> b(a.size(), 0);
  std::vector<int> b_sum(m, 0);
  for (std::uint64_t index = 1; index <= last_index; ++index) {
    // Odometer step; the highest label moves fastest.
    std::size_t p = support.size();
    while (p > 0) {
      const std::size_t v = support[p - 1];
      if (b[v] < a[v]) {
        ++b[v];
        for (int f : inc.facets_of_vertex[v]) ++b_sum[static_cast<std::size_t>(f)];
        break;
      }
      for (int f : inc.facets_of_vertex[v]) b_sum[static_cast<std::size_t>(f)] -= b[v];
      b[v] = 0;
      --p;
    }
    if (p == 0) break;

    int order_b = std::numeric_limits<int>::max();
    int order_c = std::numeric_limits<int>::max();
    for (std::size_t f = 0; f < m; ++f) {
      order_b = std::min(order_b, b_sum[f]);
      order_c = std::min(order_c, total[f] - b_sum[f]);
    }
    if (order_b + order_c >= k) {
      const int i = std::min(order_b, k);
      std::vector<int> c(a.begin(), a.end());
      for (std::size_t v = 0; v < c.size(); ++v) c[v] -= b[v];
      return Decomposition{CoverVector{b, i}, CoverVector{std::move(c), k - i}};
    }
  }
  (void)complex;
  return std::nullopt;
}

// Depth-first enumeration of minimal k-covers (k >= 1) over the vertices of
// the universe in increasing label order, so output is lexicographic.
class MinimalCoverEnumeration {
 public:
  MinimalCoverEnumeration(const SmdSubcomplex& complex, int k)
      : complex_(complex),
        inc_(complex),
        k_(k),
        order_(complex.universe().to_vector()),
        weights_(static_cast<std::size_t>(complex.vertex_count()), 0),
        sum_(inc_.facets.size(), 0),
        unassigned_(inc_.facet_size) {}

  std::vector<CoverVector> run() {
    assign(0);
    return std::move(found_);
  }

 private:
  void assign(std::size_t depth) {
    if (depth == order_.size()) {
      accept();
      return;
    }
    const auto v = static_cast<std::size_t>(order_[depth] - 1);
    const auto& facets = inc_.facets_of_vertex[v];
    for (int f : facets) --unassigned_[static_cast<std::size_t>(f)];

    for (int value = 0; value <= k_; ++value) {
      if (value > 0) {
        for (int f : facets) ++sum_[static_cast<std::size_t>(f)];
      }
      weights_[v] = value;
      if (feasible(facets) && (value == 0 || can_be_tight(facets))) assign(depth + 1);
    }
    for (int f : facets) {
      sum_[static_cast<std::size_t>(f)] -= k_;
      ++unassigned_[static_cast<std::size_t>(f)];
    }
    weights_[v] = 0;
  }

  // Each facet touched by this vertex can still reach weight k.
  bool feasible(const std::vector<int>& facets) const {
    return std::all_of(facets.begin(), facets.end(), [&](int f) {
      const auto i = static_cast<std::size_t>(f);
      return sum_[i] + k_ * unassigned_[i] >= k_;
    });
  }

  // A positive weight needs some facet through the vertex to end at exactly
  // k; facet weights only grow, so one already above k can never be tight.
  bool can_be_tight(const std::vector<int>& facets) const {
    return std::any_of(facets.begin(), facets.end(),
                       [&](int f) { return sum_[static_cast<std::size_t>(f)] <= k_; });
  }

  void accept() {
    if (*std::min_element(sum_.begin(), sum_.end()) != k_) return;
    for (Vertex label : order_) {
      const auto v = static_cast<std::size_t>(label - 1);
      if (weights_[v] == 0) continue;
      const auto& facets = inc_.facets_of_vertex[v];
      if (std::none_of(facets.begin(), facets.end(), [&](int f) { return sum_[static_cast<std::size_t>(f)] == k_; })) {
        return;
      }
    }
    if (!decompose_unchecked(complex_, inc_, weights_, k_)) found_.push_back(CoverVector{weights_, k_});
  }

  const SmdSubcomplex& complex_;
  Incidence inc_;
  int k_;
  std::vector<Vertex> order_;
  std::vector<int> weights_;
  std::vector<int> sum_;
  std::vector<int> unassigned_;
  std::vector<CoverVector> found_;
};

}  // namespace

int cover_order(const SmdSubcomplex& complex, std::span<const int> a) {
  check_weights(complex, a);
  return order_unchecked(complex, a);
}

bool is_k_cover(const SmdSubcomplex& complex, std::span<const int> a, int k) { return cover_order(complex, a) >= k; }

std::optional<Decomposition> decompose(const SmdSubcomplex& complex, std::span<const int> a, int k) {
  if (k < 0 || !is_k_cover(complex, a, k)) {
    throw Error(ErrorCode::NotAKCover, "the vector is not a " + std::to_string(k) + "-cover");
  }
  return decompose_unchecked(complex, Incidence(complex), a, k);
}

std::vector<CoverVector> indecomposable_covers(const SmdSubcomplex& complex, int k) {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "cover order must be nonnegative");
  std::vector<CoverVector> out;
  if (k == 0) {
    const Incidence inc(complex);
    for (Vertex v : complex.universe().to_vector()) {
      std::vector<int> unit(static_cast<std::size_t>(complex.vertex_count()), 0);
      unit[static_cast<std::size_t>(v - 1)] = 1;
      if (!decompose_unchecked(complex, inc, unit, 0)) out.push_back(CoverVector{std::move(unit), 0});
    }
  } else {
    out = MinimalCoverEnumeration(complex, k).run();
  }
  std::sort(out.begin(), out.end());
  return out;
}

DegreeReport d_max(const SmdSubcomplex& complex, int k_max) {
  if (k_max < 1) throw Error(ErrorCode::InvalidArgument, "k_max must be at least 1");
  DegreeReport report;
  report.k_max = k_max;
  for (int k = 1; k <= k_max; ++k) {
    const auto generators = indecomposable_covers(complex, k);
    report.counts[k] = generators.size();
    if (generators.empty()) continue;
    report.d = k;
    auto support = [](const CoverVector& c) { return std::count_if(c.a.begin(), c.a.end(), [](int x) { return x > 0; }); };
    report.certificates[k] = *std::max_element(generators.begin(), generators.end(),
                                               [&](const CoverVector& x, const CoverVector& y) {
                                                 const auto sx = support(x);
                                                 const auto sy = support(y);
                                                 return sx != sy ? sx < sy : x.a < y.a;
                                               });
  }
  return report;
}

CoverVector extend_cover_by_leaf(const SmdSubcomplex& reduced, const SmdSubcomplex& full, FacetId leaf,
                                 const CoverVector& c) {
  if (!full.contains(leaf)) throw Error(ErrorCode::UnknownFacetId, to_string(leaf));
  if (full.facet_count() < 2 || !is_leaf(full, leaf)) {
    throw Error(ErrorCode::NotALeaf, to_string(leaf) + " is not a leaf of the enlarged complex");
  }

  std::vector<std::vector<Vertex>> expected;
  for (FacetId f : full.facet_ids()) {
    if (f != leaf) expected.push_back(full.facet(f));
  }
  std::vector<std::vector<Vertex>> actual;
  for (FacetId f : reduced.facet_ids()) actual.push_back(reduced.facet(f));
  std::sort(expected.begin(), expected.end());
  std::sort(actual.begin(), actual.end());
  if (expected != actual) {
    throw Error(ErrorCode::InvalidArgument, "the reduced complex must be the enlarged one minus the leaf");
  }
  if (!is_k_cover(reduced, c.a, c.k)) {
    throw Error(ErrorCode::NotAKCover, "the cover to extend is not a " + std::to_string(c.k) + "-cover");
  }

  const VertexSet fresh = free_vertices(full, leaf);
  if (fresh.empty()) throw Error(ErrorCode::NoFreeVertex, to_string(leaf) + " has no free vertex");

  CoverVector out{std::vector<int>(static_cast<std::size_t>(full.vertex_count()), 0), c.k};
  for (std::size_t i = 0; i < c.a.size(); ++i) {
    if (c.a[i] == 0) continue;
    if (i >= out.a.size() || !full.universe().contains(static_cast<Vertex>(i + 1))) {
      throw Error(ErrorCode::InvalidArgument, "weighted vertex " + std::to_string(i + 1) + " is missing");
    }
    out.a[i] = c.a[i];
  }
  // Weight k on the free vertex is not enough for indecomposability: when c
  // already gives the leaf weight w > 0, the extra w splits off as a 0-cover.
  // Only the deficit is added.
  out.a[static_cast<std::size_t>(fresh.min() - 1)] = std::max(0, c.k - facet_weight(full, leaf, out.a));
  return out;
}

CoverVector witness_cover_from_cycle(const SmdSubcomplex& complex, const RelationTree& tree, const Cycle& cycle) {
  if (!is_quasi_tree(complex)) throw Error(ErrorCode::NotQuasiTree, "the witness construction needs a quasi-tree");
  if (!is_cycle(complex, cycle) || !cycle.is_odd() || cycle.length() < 3 || !is_special(complex, cycle)) {
    throw Error(ErrorCode::NotSpecialOddCycle, "expected a special cycle of odd length");
  }
  if (tree.nodes() != complex.facet_ids()) {
    throw Error(ErrorCode::InvalidArgument, "the relation tree must span exactly the facets of the complex");
  }

  const RelationTree core = minimal_subtree(tree, cycle.facets);
  const SmdSubcomplex spanned(complex.parent(), core.nodes());

  // Peel leaves outside the spanned part until only it remains.
  std::vector<SmdSubcomplex> chain{complex};
  std::vector<FacetId> peeled;
  while (chain.back().facet_count() > spanned.facet_count()) {
    const SmdSubcomplex& current = chain.back();
    std::optional<FacetId> next;
    for (FacetId f : current.facet_ids()) {
      if (!spanned.contains(f) && is_leaf(current, f)) {
        next = f;
        break;
      }
    }
    if (!next) throw Error(ErrorCode::VerificationFailed, "no removable leaf outside the cycle's subtree");
    peeled.push_back(*next);
    chain.push_back(current.without(*next));
  }

  CoverVector witness{std::vector<int>(static_cast<std::size_t>(complex.vertex_count()), 0), 2};
  for (Vertex v : cycle.vertices) witness.a[static_cast<std::size_t>(v - 1)] = 1;
  if (cover_order(spanned, witness.a) < 2) {
    throw Error(ErrorCode::VerificationFailed, "cycle indicator is not a 2-cover of the spanned subcomplex");
  }

  for (std::size_t step = peeled.size(); step > 0; --step) {
    const SmdSubcomplex& smaller = chain[step];
    const SmdSubcomplex& larger = chain[step - 1];
    const FacetId leaf = peeled[step - 1];
    witness = extend_cover_by_leaf(smaller, larger, leaf, witness);
  }

  if (decompose(complex, witness.a, 2)) {
    throw Error(ErrorCode::VerificationFailed, "constructed witness decomposes");
  }
  return witness;
}

}  // namespace qcover
