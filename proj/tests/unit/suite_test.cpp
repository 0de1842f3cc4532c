#include <gtest/gtest.h>

#include <cmath>

#include "ein2/suite.hpp"

namespace ein2 {
namespace {

TEST(Fidelity, AllFamiliesMatchPrintedTables) {
  for (Family f : kAllFamilies) {
    FidelityReport r = check_fidelity(f, 30, derive_seed(3, static_cast<std::uint64_t>(f)));
    EXPECT_TRUE(r.passed()) << to_string(f) << (r.notes.empty() ? "" : ": " + r.notes.front());
    EXPECT_EQ(r.samples, 30u);
  }
}

TEST(Remarks, G5Example) {
  RemarkReport r = g5_remark();
  ASSERT_TRUE(r.solver.has_value());
  EXPECT_TRUE(r.passed);
  EXPECT_NEAR(static_cast<double>(r.expected_l1), -2.9752829760195, 1e-12);
  EXPECT_LE(r.error_l1, 1e-12L);
  EXPECT_LE(r.error_l2, 1e-12L);
}

TEST(Remarks, G6Example) {
  RemarkReport r = g6_remark();
  ASSERT_TRUE(r.solver.has_value());
  EXPECT_TRUE(r.passed);
  // (4√10 − 5)/3 and (37 − 8√10)/12
  EXPECT_NEAR(static_cast<double>(r.expected_l1), 2.5497035468911724, 1e-13);
  EXPECT_NEAR(static_cast<double>(r.expected_l2), 0.97514822655441378, 1e-13);
  EXPECT_LE(r.error_l1, 1e-12L);
  EXPECT_LE(r.error_l2, 1e-12L);
}

TEST(Negatives, NoFalsePositives) {
  for (Family f : kAllFamilies) {
    NegativeReport r = sample_negatives(f, 100, derive_seed(5, static_cast<std::uint64_t>(f)));
    EXPECT_TRUE(r.passed()) << to_string(f);
    EXPECT_EQ(r.samples, 100u);
  }
}

TEST(Suite, TheoremFilterRunsOneReport) {
  SuiteOptions o;
  o.theorem = "2.5";
  SuiteReport r = run_suite(o);
  ASSERT_EQ(r.branches.size(), 1u);
  EXPECT_EQ(r.branches[0].id, "2.5");
  EXPECT_EQ(r.branches[0].verdict, BranchReport::Verdict::verified);
  EXPECT_EQ(r.fidelity.size(), 1u);
  EXPECT_TRUE(r.remarks.empty());
  EXPECT_TRUE(r.passed);
}

TEST(Suite, SameSeedSameReport) {
  SuiteOptions o;
  o.theorem = "3.4";
  o.branch_samples = 10;
  SuiteReport a = run_suite(o);
  SuiteReport b = run_suite(o);
  ASSERT_EQ(a.branches.size(), b.branches.size());
  for (std::size_t i = 0; i < a.branches.size(); ++i) {
    EXPECT_EQ(a.branches[i].passed, b.branches[i].passed);
    EXPECT_EQ(a.branches[i].max_residual.to_string(), b.branches[i].max_residual.to_string());
    EXPECT_EQ(a.branches[i].first_quadratic, b.branches[i].first_quadratic);
  }
}

TEST(Conventions, LambdaTwoZeroSolutionsCarryOver) {
  // rows differ only in the λ₂ coefficient of (3,3), so any solution with λ₂ = 0 solves both
  for (const auto& b : branch_catalog()) {
    for (const auto& p : sample_branch(b, 10, 9)) {
      StructureConstants sc = build_family(p);
      Ein2Solution d = is_ein2(sc, Convention::delta);
      Ein2Solution m = is_ein2(sc, Convention::metric);
      for (const auto* from : {&d, &m}) {
        const Ein2Solution* to = from == &d ? &m : &d;
        Ein2System sys = build_system(ricci(sc), from == &d ? Convention::metric : Convention::delta);
        if (from->point && from->point->l2.is_zero()) {
          EXPECT_TRUE(to->contains(from->point->l1, Scalar())) << b.id;
          EXPECT_TRUE(sup_residual(sys, from->point->l1, Scalar()).is_zero()) << b.id;
        }
        if (from->free_lambda1_at(Scalar())) EXPECT_TRUE(to->free_lambda1_at(Scalar())) << b.id;
      }
    }
  }
}

TEST(Conventions, MetricRunListsDiscrepanciesWithoutFailing) {
  SuiteOptions o;
  o.theorem = "2.7";
  o.branch_samples = 10;
  o.convention = Convention::metric;
  SuiteReport r = run_suite(o);
  EXPECT_TRUE(r.passed);
  EXPECT_FALSE(r.discrepancies.empty());
  for (const auto& d : r.discrepancies) {
    EXPECT_GT(d.mismatched, 0u);
    EXPECT_EQ(d.example.family, Family::G3);
  }
  for (const auto& b : r.branches) EXPECT_EQ(b.convention, Convention::delta);
}

}  // namespace
}  // namespace ein2
