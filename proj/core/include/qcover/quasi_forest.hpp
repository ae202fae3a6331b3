#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qcover/complex.hpp"

namespace qcover {

/// Facets that can serve as a branch of `facet`: every G != facet with
/// H ∩ facet ⊆ G ∩ facet for all other facets H. Empty when `facet` is not a
/// leaf. A single-facet complex reports the facet as its own branch.
std::vector<FacetId> branches_of(const SmdSubcomplex& complex, FacetId facet);

bool is_leaf(const SmdSubcomplex& complex, FacetId facet);

struct LeafCandidate {
  FacetId leaf;
  std::vector<FacetId> branches;
};

/// First leaf in FacetId order, with all of its branches.
std::optional<LeafCandidate> find_leaf(const SmdSubcomplex& complex);

/// order[0] is F1. Every order[i] is a leaf of the SMD on order[0..i].
using LeafOrder = std::vector<FacetId>;

/// Greedy recognition: peel off leaves until one facet is left, then reverse.
/// Returns nullopt when no leaf exists at some step (not a quasi-forest).
std::optional<LeafOrder> leaf_order(const SmdSubcomplex& complex);

/// Checks the leaf condition on every prefix. Throws NotAPermutation when
/// `order` is not a permutation of the complex's facets.
bool validate_leaf_order(const SmdSubcomplex& complex, std::span<const FacetId> order);

bool is_quasi_forest(const SmdSubcomplex& complex);
bool is_quasi_tree(const SmdSubcomplex& complex);

/// Vertices of `facet` that lie in no other facet. Throws UnknownFacetId.
VertexSet free_vertices(const SmdSubcomplex& complex, FacetId facet);

/// Chooses a branch among the admissible ones (never empty, sorted).
class BranchRule {
 public:
  using Chooser = std::function<FacetId(FacetId leaf, std::span<const FacetId> admissible)>;

  explicit BranchRule(std::string name, Chooser chooser) : name_(std::move(name)), chooser_(std::move(chooser)) {}

  static BranchRule smallest();
  static BranchRule largest();
  /// Uniform choice driven by a private generator; copies share the stream.
  static BranchRule seeded(std::uint64_t seed);
  /// "smallest", "largest" or "random" (which uses `seed`).
  static BranchRule by_name(const std::string& name, std::uint64_t seed = 0);

  FacetId operator()(FacetId leaf, std::span<const FacetId> admissible) const { return chooser_(leaf, admissible); }
  const std::string& name() const { return name_; }

 private:
  std::string name_;
  Chooser chooser_;
};

/// A tree on facet ids given by its branch map. The root maps to itself and
/// every other node reaches the root by iterating the map.
class RelationTree {
 public:
  /// Throws InvalidArgument when the map does not describe such a tree.
  RelationTree(FacetId root, std::map<FacetId, FacetId> branch);

  FacetId root() const { return root_; }
  /// Node ids in increasing order.
  std::vector<FacetId> nodes() const;
  std::size_t node_count() const { return branch_.size(); }
  bool contains(FacetId id) const { return branch_.contains(id); }
  /// Throws UnknownNode.
  FacetId branch(FacetId id) const;
  const std::map<FacetId, FacetId>& branch_map() const { return branch_; }
  /// (child, branch(child)) for every non-root node, ordered by child.
  std::vector<std::pair<FacetId, FacetId>> edges() const;
  /// Number of incident edges. Throws UnknownNode.
  int degree(FacetId id) const;

  friend bool operator==(const RelationTree&, const RelationTree&) = default;

 private:
  FacetId root_;
  std::map<FacetId, FacetId> branch_;
};

/// Builds the tree by detaching order.back(), order[m-2], ... in turn and
/// joining each to a branch within its prefix picked by `rule`.
/// Throws InvalidLeafOrder when `order` is not a leaf order of `complex`.
RelationTree relation_tree(const SmdSubcomplex& complex, const LeafOrder& order,
                           const BranchRule& rule = BranchRule::smallest());

/// G ≤_T F: iterating the branch map from F reaches G. Reflexive.
bool leq(const RelationTree& tree, FacetId lower, FacetId upper);

/// Smallest subtree containing `targets`, rooted at its ≤_T-minimal node.
/// Throws UnknownNode, or EmptySelection for an empty target set.
RelationTree minimal_subtree(const RelationTree& tree, std::span<const FacetId> targets);

/// Graphviz rendering with one "Fi: {..}" box per facet and an arrow from
/// every facet to its branch. Output is byte-stable.
std::string to_dot(const RelationTree& tree, const SmdSubcomplex& complex,
                   const std::vector<std::string>& labels = {});

}  // namespace qcover
