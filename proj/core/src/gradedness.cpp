#include "qcover/gradedness.hpp"

#include "qcover/error.hpp"

namespace qcover {

std::string_view to_string(VerdictMethod method) noexcept {
  switch (method) {
    case VerdictMethod::Criterion: return "criterion";
    case VerdictMethod::BruteForce: return "brute_force";
    case VerdictMethod::Both: return "both";
  }
  return "unknown";
}

Verdict is_standard_graded(const SmdSubcomplex& complex, const BranchRule& rule, std::uint64_t budget) {
  if (!is_connected(complex)) throw Error(ErrorCode::NotQuasiTree, "the complex is disconnected");
  const auto order = leaf_order(complex);
  if (!order) throw Error(ErrorCode::NotQuasiTree, "the complex has no leaf order");

  Verdict verdict;
  verdict.method = VerdictMethod::Criterion;
  auto cycle = find_special_odd_cycle(complex, budget);
  if (!cycle) return verdict;

  verdict.standard_graded = false;
  const RelationTree tree = relation_tree(complex, *order, rule);
  verdict.cover_witness = witness_cover_from_cycle(complex, tree, *cycle);
  verdict.cycle_witness = std::move(cycle);
  return verdict;
}

Verdict brute_force_verdict(const SmdSubcomplex& complex, int k_max) {
  if (k_max < 2) throw Error(ErrorCode::InvalidArgument, "k_max must be at least 2");
  Verdict verdict;
  verdict.method = VerdictMethod::BruteForce;
  for (int k = 2; k <= k_max; ++k) {
    auto generators = indecomposable_covers(complex, k);
    if (!generators.empty()) {
      verdict.standard_graded = false;
      verdict.cover_witness = std::move(generators.front());
      return verdict;
    }
  }
  verdict.bound_used = k_max;
  return verdict;
}

CrossValidation cross_validate(const SmdSubcomplex& complex, int k_max, const BranchRule& rule,
                               std::uint64_t budget) {
  CrossValidation out;
  out.criterion = is_standard_graded(complex, rule, budget);
  out.brute_force = brute_force_verdict(complex, k_max);
  out.agree = out.criterion.standard_graded == out.brute_force.standard_graded;
  return out;
}

std::vector<SmdFinding> smd_sweep(const SmdSubcomplex& complex, int k_max) {
  const auto& ids = complex.facet_ids();
  if (ids.size() > 16) throw Error(ErrorCode::InvalidArgument, "SMD sweep is limited to 16 facets");
  std::vector<SmdFinding> out;
  for (std::uint32_t mask = 1; mask < (1U << ids.size()); ++mask) {
    std::vector<FacetId> chosen;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (mask & (1U << i)) chosen.push_back(ids[i]);
    }
    SmdSubcomplex sub(complex.parent(), chosen);
    Verdict v = brute_force_verdict(sub, k_max);
    if (!v.standard_graded) out.push_back(SmdFinding{std::move(chosen), std::move(v)});
  }
  return out;
}

}  // namespace qcover
