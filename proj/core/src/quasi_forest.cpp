#include "qcover/quasi_forest.hpp"

#include <algorithm>
#include <memory>
#include <set>
#include <sstream>

#include "qcover/error.hpp"
#include "qcover/random.hpp"

namespace qcover {

std::vector<FacetId> branches_of(const SmdSubcomplex& complex, FacetId facet) {
  const VertexSet f = complex.mask(facet);
  if (complex.facet_count() == 1) return {facet};

  // H ∩ F ⊆ G ∩ F for every H exactly when G ∩ F is the whole trace of the
  // other facets on F.
  VertexSet trace;
  for (FacetId h : complex.facet_ids()) {
    if (h != facet) trace = trace | (complex.mask(h) & f);
  }
  std::vector<FacetId> out;
  for (FacetId g : complex.facet_ids()) {
    if (g != facet && (complex.mask(g) & f) == trace) out.push_back(g);
  }
  return out;
}

bool is_leaf(const SmdSubcomplex& complex, FacetId facet) { return !branches_of(complex, facet).empty(); }

std::optional<LeafCandidate> find_leaf(const SmdSubcomplex& complex) {
  for (FacetId id : complex.facet_ids()) {
    auto branches = branches_of(complex, id);
    if (!branches.empty()) return LeafCandidate{id, std::move(branches)};
  }
  return std::nullopt;
}

std::optional<LeafOrder> leaf_order(const SmdSubcomplex& complex) {
  LeafOrder removed;
  SmdSubcomplex current = complex;
  while (current.facet_count() > 1) {
    auto leaf = find_leaf(current);
    if (!leaf) return std::nullopt;
    removed.push_back(leaf->leaf);
    current = current.without(leaf->leaf);
  }
  removed.push_back(current.facet_ids().front());
  std::reverse(removed.begin(), removed.end());
  return removed;
}

bool validate_leaf_order(const SmdSubcomplex& complex, std::span<const FacetId> order) {
  std::vector<FacetId> sorted(order.begin(), order.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted != complex.facet_ids()) {
    throw Error(ErrorCode::NotAPermutation, "the order must list every facet of the complex exactly once");
  }
  for (std::size_t i = 1; i < order.size(); ++i) {
    SmdSubcomplex prefix(complex.parent(), std::vector<FacetId>(order.begin(), order.begin() + i + 1));
    if (!is_leaf(prefix, order[i])) return false;
  }
  return true;
}

bool is_quasi_forest(const SmdSubcomplex& complex) { return leaf_order(complex).has_value(); }

bool is_quasi_tree(const SmdSubcomplex& complex) { return is_connected(complex) && is_quasi_forest(complex); }

VertexSet free_vertices(const SmdSubcomplex& complex, FacetId facet) {
  VertexSet others;
  for (FacetId id : complex.facet_ids()) {
    if (id != facet) others = others | complex.mask(id);
  }
  return complex.mask(facet) - others;
}

BranchRule BranchRule::smallest() {
  return BranchRule("smallest", [](FacetId, std::span<const FacetId> admissible) { return admissible.front(); });
}

BranchRule BranchRule::largest() {
  return BranchRule("largest", [](FacetId, std::span<const FacetId> admissible) { return admissible.back(); });
}

BranchRule BranchRule::seeded(std::uint64_t seed) {
  auto rng = std::make_shared<Rng>(seed);
  return BranchRule("random", [rng](FacetId, std::span<const FacetId> admissible) {
    return admissible[uniform_below(*rng, admissible.size())];
  });
}

BranchRule BranchRule::by_name(const std::string& name, std::uint64_t seed) {
  if (name == "smallest") return smallest();
  if (name == "largest") return largest();
  if (name == "random") return seeded(seed);
  throw Error(ErrorCode::InvalidArgument, "unknown branch rule '" + name + "' (expected smallest, largest or random)");
}

RelationTree::RelationTree(FacetId root, std::map<FacetId, FacetId> branch) : root_(root), branch_(std::move(branch)) {
  auto it = branch_.find(root_);
  if (it == branch_.end() || it->second != root_) {
    throw Error(ErrorCode::InvalidArgument, "the root must map to itself");
  }
  for (const auto& [node, parent] : branch_) {
    FacetId cur = node;
    for (std::size_t steps = 0; cur != root_; ++steps) {
      auto next = branch_.find(cur);
      if (next == branch_.end() || steps > branch_.size()) {
        throw Error(ErrorCode::InvalidArgument, "branch chain from " + to_string(node) + " does not reach the root");
      }
      cur = next->second;
    }
  }
}

std::vector<FacetId> RelationTree::nodes() const {
  std::vector<FacetId> out;
  out.reserve(branch_.size());
  for (const auto& entry : branch_) out.push_back(entry.first);
  return out;
}

FacetId RelationTree::branch(FacetId id) const {
  auto it = branch_.find(id);
  if (it == branch_.end()) throw Error(ErrorCode::UnknownNode, to_string(id) + " is not a node of the tree");
  return it->second;
}

std::vector<std::pair<FacetId, FacetId>> RelationTree::edges() const {
  std::vector<std::pair<FacetId, FacetId>> out;
  for (const auto& [node, parent] : branch_) {
    if (node != root_) out.emplace_back(node, parent);
  }
  return out;
}

int RelationTree::degree(FacetId id) const {
  if (!contains(id)) throw Error(ErrorCode::UnknownNode, to_string(id) + " is not a node of the tree");
  int d = id == root_ ? 0 : 1;
  for (const auto& [node, parent] : branch_) {
    if (node != root_ && parent == id) ++d;
  }
  return d;
}

RelationTree relation_tree(const SmdSubcomplex& complex, const LeafOrder& order, const BranchRule& rule) {
  if (!validate_leaf_order(complex, order)) {
    throw Error(ErrorCode::InvalidLeafOrder, "some facet is not a leaf of its prefix");
  }
  std::map<FacetId, FacetId> branch;
  branch[order.front()] = order.front();
  for (std::size_t i = order.size() - 1; i >= 1; --i) {
    SmdSubcomplex prefix(complex.parent(), std::vector<FacetId>(order.begin(), order.begin() + i + 1));
    const auto admissible = branches_of(prefix, order[i]);
    const FacetId chosen = rule(order[i], admissible);
    if (std::find(admissible.begin(), admissible.end(), chosen) == admissible.end()) {
      throw Error(ErrorCode::InvalidArgument, "branch rule '" + rule.name() + "' picked a non-branch for " +
                                                  to_string(order[i]));
    }
    branch[order[i]] = chosen;
  }
  return RelationTree(order.front(), std::move(branch));
}

bool leq(const RelationTree& tree, FacetId lower, FacetId upper) {
  if (!tree.contains(lower)) throw Error(ErrorCode::UnknownNode, to_string(lower) + " is not a node of the tree");
  FacetId cur = upper;
  while (true) {
    if (cur == lower) return true;
    const FacetId next = tree.branch(cur);
    if (next == cur) return false;
    cur = next;
  }
}

RelationTree minimal_subtree(const RelationTree& tree, std::span<const FacetId> targets) {
  if (targets.empty()) throw Error(ErrorCode::EmptySelection, "minimal subtree of an empty target set");
  std::set<FacetId> keep(targets.begin(), targets.end());
  for (FacetId t : keep) {
    if (!tree.contains(t)) throw Error(ErrorCode::UnknownNode, to_string(t) + " is not a node of the tree");
  }

  std::map<FacetId, std::set<FacetId>> adjacent;
  for (FacetId node : tree.nodes()) adjacent[node];
  for (const auto& [child, parent] : tree.edges()) {
    adjacent[child].insert(parent);
    adjacent[parent].insert(child);
  }

  for (bool pruned = true; pruned;) {
    pruned = false;
    for (auto it = adjacent.begin(); it != adjacent.end();) {
      if (it->second.size() <= 1 && !keep.contains(it->first)) {
        for (FacetId other : it->second) adjacent[other].erase(it->first);
        it = adjacent.erase(it);
        pruned = true;
      } else {
        ++it;
      }
    }
  }

  std::map<FacetId, FacetId> branch;
  std::optional<FacetId> root;
  for (const auto& [node, unused] : adjacent) {
    const FacetId parent = tree.branch(node);
    if (parent == node || !adjacent.contains(parent)) {
      root = node;
      branch[node] = node;
    } else {
      branch[node] = parent;
    }
  }
  return RelationTree(*root, std::move(branch));
}

std::string to_dot(const RelationTree& tree, const SmdSubcomplex& complex, const std::vector<std::string>& labels) {
  std::ostringstream out;
  out << "digraph relation_tree {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box];\n";
  for (FacetId node : tree.nodes()) {
    out << "  " << to_string(node) << " [label=\"" << to_string(node) << ": {";
    const auto& vertices = complex.facet(node);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      if (i) out << ',';
      if (labels.empty()) {
        out << vertices[i];
      } else {
        // Quoted DOT strings only need '"' and '\\' escaped.
        for (char ch : labels.at(static_cast<std::size_t>(vertices[i] - 1))) {
          if (ch == '"' || ch == '\\') out << '\\';
          out << ch;
        }
      }
    }
    out << "}\"";
    if (node == tree.root()) out << ", peripheries=2";
    out << "];\n";
  }
  for (const auto& [child, parent] : tree.edges()) {
    out << "  " << to_string(child) << " -> " << to_string(parent) << " [label=\"br\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace qcover
