#include <gtest/gtest.h>

#include "helpers.hpp"
#include "qcover/error.hpp"
#include "qcover/families.hpp"
#include "qcover/gradedness.hpp"

namespace qcover {
namespace {

using testing_support::F;

TEST(IsStandardGraded, DeltaThreeFails) {
  const auto d3 = delta_n(3);
  const auto v = is_standard_graded(d3);
  EXPECT_FALSE(v.standard_graded);
  EXPECT_EQ(v.method, VerdictMethod::Criterion);
  ASSERT_TRUE(v.cycle_witness);
  ASSERT_TRUE(v.cover_witness);
  EXPECT_TRUE(is_special(d3, *v.cycle_witness));
  EXPECT_EQ(*v.cover_witness, (CoverVector{{1, 1, 1, 0, 0, 0}, 2}));
  EXPECT_TRUE(is_indecomposable(d3, v.cover_witness->a, 2));
}

TEST(IsStandardGraded, FigureOnePasses) {
  const auto v = is_standard_graded(figure1());
  EXPECT_TRUE(v.standard_graded);
  EXPECT_FALSE(v.cycle_witness);
  EXPECT_FALSE(v.cover_witness);
  EXPECT_FALSE(v.bound_used);
}

TEST(IsStandardGraded, SingleFacetPasses) {
  EXPECT_TRUE(is_standard_graded(SimplicialComplex::from_facets({{1, 2, 3}})).standard_graded);
}

TEST(IsStandardGraded, RejectsNonQuasiTrees) {
  const auto tri = SimplicialComplex::from_facets({{1, 2}, {2, 3}, {1, 3}});
  try {
    is_standard_graded(tri);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotQuasiTree);
  }
  EXPECT_THROW(is_standard_graded(SimplicialComplex::from_facets({{1, 2}, {3, 4}})), Error);
}

TEST(IsStandardGraded, DeltaFourWitnessUnderRandomRules) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto v = is_standard_graded(delta_n(4), BranchRule::seeded(seed));
    ASSERT_TRUE(v.cycle_witness);
    ASSERT_TRUE(v.cover_witness);
    // The cycle runs through three satellites; its indicator is the witness.
    std::vector<int> indicator(8, 0);
    for (Vertex x : v.cycle_witness->vertices) indicator[static_cast<std::size_t>(x - 1)] = 1;
    EXPECT_EQ(v.cycle_witness->length(), 3U);
    EXPECT_EQ(v.cover_witness->a, indicator);
    EXPECT_TRUE(is_indecomposable(delta_n(4), indicator, 2));
  }
}

TEST(BruteForceVerdict, Examples) {
  const auto v = brute_force_verdict(delta_n(3), 3);
  EXPECT_FALSE(v.standard_graded);
  EXPECT_EQ(v.method, VerdictMethod::BruteForce);
  ASSERT_TRUE(v.cover_witness);
  EXPECT_EQ(v.cover_witness->k, 2);

  const auto f1 = brute_force_verdict(figure1(), 3);
  EXPECT_TRUE(f1.standard_graded);
  EXPECT_EQ(f1.bound_used, 3);

  // Works off quasi-trees too: the graph triangle has generator (1,1,1) of degree 2.
  const auto tri = brute_force_verdict(SimplicialComplex::from_facets({{1, 2}, {2, 3}, {1, 3}}), 2);
  EXPECT_FALSE(tri.standard_graded);
  EXPECT_THROW(brute_force_verdict(figure1(), 1), Error);
}

TEST(CrossValidate, AgreesOnKnownComplexes) {
  for (const auto& c : {delta_n(3), delta_n(4), figure1()}) {
    const auto cv = cross_validate(c, 3);
    EXPECT_TRUE(cv.agree);
    EXPECT_EQ(cv.criterion.standard_graded, cv.brute_force.standard_graded);
  }
}

TEST(SmdSweep, FindsDeltaThreeInsideLargerComplex) {
  const auto c = SimplicialComplex::from_facets({{1, 2, 3}, {2, 3, 4}, {1, 3, 5}, {1, 2, 6}, {1, 2, 7}});
  const auto findings = smd_sweep(c, 2);
  ASSERT_FALSE(findings.empty());
  for (const auto& f : findings) EXPECT_FALSE(f.verdict.standard_graded);
  EXPECT_TRUE(smd_sweep(figure1(), 2).empty());
}

TEST(VerdictMethod, Names) {
  EXPECT_EQ(to_string(VerdictMethod::Criterion), "criterion");
  EXPECT_EQ(to_string(VerdictMethod::BruteForce), "brute_force");
  EXPECT_EQ(to_string(VerdictMethod::Both), "both");
}

}  // namespace
}  // namespace qcover
