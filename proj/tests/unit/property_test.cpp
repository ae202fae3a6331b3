// Cross-module properties on seeded random inputs. The large-sample versions
// live in the acceptance binary; these runs are sized for the unit suite.

#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "checks.hpp"
#include "helpers.hpp"
#include "qcover/covers.hpp"
#include "qcover/cycles.hpp"
#include "qcover/families.hpp"
#include "qcover/gradedness.hpp"
#include "qcover/io.hpp"
#include "qcover/quasi_forest.hpp"

namespace qcover {
namespace {

SimplicialComplex sample_quasi_tree(std::uint64_t seed) {
  return random_quasi_tree({seed, 1 + static_cast<int>(seed % 6), 4, 9});
}

TEST(LeafOrderProperty, GreedyMatchesExhaustiveSearch) {
  std::mt19937_64 rng(17);
  int positive = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto c = SimplicialComplex::from_facets(oracle::random_antichain(rng, 5, 7));
    const bool expected = oracle::has_leaf_order(testing_support::to_oracle(c));
    const auto order = leaf_order(c);
    ASSERT_EQ(order.has_value(), expected) << io::write_json(c);
    if (order) {
      ++positive;
      EXPECT_TRUE(validate_leaf_order(c, *order));
    }
  }
  EXPECT_GT(positive, 20);
  EXPECT_LT(positive, 200);
}

TEST(RelationTreeProperty, InvariantsUnderRandomRules) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto c = sample_quasi_tree(seed);
    const auto order = *leaf_order(c);
    for (std::uint64_t r = 0; r < 5; ++r) {
      const auto tree = relation_tree(c, order, BranchRule::seeded(seed * 31 + r));
      EXPECT_EQ(testing_support::check_tree(c, tree), "") << io::write_json(c);
      for (const auto& [child, parent] : tree.edges()) {
        EXPECT_TRUE(leq(tree, parent, child));
        EXPECT_FALSE(leq(tree, child, parent));
      }
    }
  }
}

// The root of a relation tree is the first facet of the order.
TEST(RelationTreeProperty, RootIsFirstFacet) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto c = sample_quasi_tree(seed);
    const auto order = *leaf_order(c);
    EXPECT_EQ(relation_tree(c, order, BranchRule::largest()).root(), order.front());
  }
}

// A leaf F with branch G has F ⊄ G, and any vertex of F outside G lies in
// no other facet.
TEST(FreeVertexProperty, LeavesHaveFreeVertices) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto c = sample_quasi_tree(seed);
    if (c.facet_count() < 2) continue;
    for (FacetId id : c.facet_ids()) {
      if (is_leaf(c, id)) EXPECT_FALSE(free_vertices(c, id).empty()) << io::write_json(c);
    }
  }
}

TEST(MinimalSubtreeProperty, SmallestConnectedCover) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto c = sample_quasi_tree(seed);
    const auto tree = relation_tree(c, *leaf_order(c), BranchRule::seeded(seed));
    std::mt19937_64 rng(seed);
    std::vector<FacetId> targets;
    for (FacetId id : c.facet_ids()) {
      if (rng() % 2 == 0) targets.push_back(id);
    }
    if (targets.empty()) targets.push_back(c.facet_ids().front());
    const auto sub = minimal_subtree(tree, targets);
    // Every target is kept and every kept non-target separates two targets:
    // removing a degree-one non-target would give a smaller subtree.
    for (FacetId t : targets) EXPECT_TRUE(sub.contains(t));
    for (FacetId id : sub.nodes()) {
      const bool is_target = std::find(targets.begin(), targets.end(), id) != targets.end();
      if (!is_target) EXPECT_GE(sub.degree(id), 2);
      EXPECT_TRUE(leq(tree, sub.root(), id));
    }
    EXPECT_EQ(sub.edges().size() + 1, sub.node_count());
  }
}

TEST(IncidenceProperty, SubtreeNodesMeetCycleTwice) {
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const auto c = sample_quasi_tree(seed);
    const auto cycles = enumerate_cycles(c, 7);
    if (cycles.empty()) continue;
    const auto order = *leaf_order(c);
    for (std::uint64_t r = 0; r < 3; ++r) {
      const auto tree = relation_tree(c, order, BranchRule::seeded(seed + 1000 * r));
      for (const auto& cycle : cycles) {
        EXPECT_EQ(testing_support::check_incidence(c, tree, cycle), "") << io::write_json(c);
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 0U);
}

TEST(ExtensionProperty, LiftsStayIndecomposable) {
  std::size_t lifted = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto c = random_quasi_tree({seed, 2 + static_cast<int>(seed % 4), 3, 8});
    for (FacetId id : c.facet_ids()) {
      if (!is_leaf(c, id)) continue;
      EXPECT_EQ(testing_support::check_extension(c, id, 2, lifted), "") << io::write_json(c);
    }
  }
  EXPECT_GT(lifted, 100U);
}

// Degree bound monotone under adding a leaf: d of the smaller complex never
// exceeds d of the larger one at the same bound.
TEST(ExtensionProperty, DegreeMonotoneUnderLeaves) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto c = random_quasi_tree({seed, 2 + static_cast<int>(seed % 4), 3, 8});
    const int full = d_max(c, 3).d;
    for (FacetId id : c.facet_ids()) {
      if (is_leaf(c, id)) EXPECT_LE(d_max(SmdSubcomplex(c).without(id), 3).d, full);
    }
  }
}

TEST(CriterionProperty, CycleExactlyWhenDegreeTwoGenerator) {
  // The generator rarely closes a special odd cycle, so half of the inputs
  // are grown from a complex that has one.
  std::mt19937_64 rng(11);
  int graded = 0;
  int not_graded = 0;
  for (std::uint64_t seed = 0; seed < 160; ++seed) {
    const auto c = seed % 2 == 0 ? sample_quasi_tree(seed)
                                 : testing_support::grow_quasi_tree(seed % 4 == 1 ? delta_n(3) : figure1(), rng,
                                                                    static_cast<int>(rng() % 3), 9);
    const bool cycle = find_special_odd_cycle(c).has_value();
    const bool generator = !indecomposable_covers(c, 2).empty();
    ASSERT_EQ(cycle, generator) << io::write_json(c);
    (cycle ? not_graded : graded)++;
    const auto v = is_standard_graded(c);
    EXPECT_EQ(v.standard_graded, !cycle);
    if (v.cover_witness) EXPECT_TRUE(is_indecomposable(c, v.cover_witness->a, 2));
  }
  EXPECT_GT(graded, 5);
  EXPECT_GT(not_graded, 5);
}

}  // namespace
}  // namespace qcover
