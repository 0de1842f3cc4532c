#include <gtest/gtest.h>

#include <cmath>

#include "ein2/printed.hpp"
#include "ein2/system.hpp"

namespace ein2 {
namespace {

FamilyParams point(Family f, Scalar a, Scalar b = 0, Scalar c = 0, Scalar d = 0, int eta = 1) {
  FamilyParams p;
  p.family = f;
  p.alpha = a;
  p.beta = b;
  p.gamma = c;
  p.delta = d;
  p.eta = eta;
  return p;
}

Ein2System system_of(const FamilyParams& p, Convention c = Convention::delta) {
  return build_system(ricci(build_family(p)), c);
}

Ein2System rows(std::initializer_list<std::array<Scalar, 3>> abc) {
  Ein2System sys;
  std::size_t n = 0;
  for (const auto& r : abc) {
    sys.rows[n].a = r[0];
    sys.rows[n].b = r[1];
    sys.rows[n].c = r[2];
    ++n;
  }
  return sys;
}

TEST(BuildSystem, G1FirstRow) {
  Ein2System sys = system_of(point(Family::G1, 1, 2));
  const Ein2Row& r = sys.rows[0];
  EXPECT_EQ(r.i, 0u);
  EXPECT_EQ(r.j, 0u);
  EXPECT_EQ(r.a.rational(), 4);   // β⁴/4
  EXPECT_EQ(r.b.rational(), -2);  // −β²/2
  EXPECT_EQ(r.c.rational(), 1);
}

TEST(BuildSystem, FlatRowsAreDeltas) {
  Ein2System sys = build_system(ricci(StructureConstants()));
  for (const auto& r : sys.rows) {
    EXPECT_TRUE(r.a.is_zero());
    EXPECT_TRUE(r.b.is_zero());
    EXPECT_EQ(r.c.rational(), r.i == r.j ? 1 : 0);
  }
}

TEST(BuildSystem, MetricConventionFlipsOnlyTheTimelikeRow) {
  Ein2System d = build_system(ricci(StructureConstants()), Convention::delta);
  Ein2System m = build_system(ricci(StructureConstants()), Convention::metric);
  for (std::size_t n = 0; n < 5; ++n) EXPECT_TRUE(d.rows[n].c == m.rows[n].c);
  EXPECT_EQ(d.rows[5].c.rational(), 1);
  EXPECT_EQ(m.rows[5].c.rational(), -1);
  EXPECT_EQ(parse_convention("metric"), Convention::metric);
  EXPECT_THROW(parse_convention("lorentz"), std::invalid_argument);
}

TEST(BuildSystem, G7OffDiagonalRow) {
  // (α² − αδ + βγ)(λ₁ + γ²) with α = 0, β = γ = δ = 1
  Ein2System sys = system_of(point(Family::G7, 0, 1, 1, 1));
  const Ein2Row& r = sys.rows[4];
  EXPECT_EQ(r.i, 1u);
  EXPECT_EQ(r.j, 2u);
  EXPECT_TRUE((r.a == Scalar(1) && r.b == Scalar(1)) || (r.a == Scalar(-1) && r.b == Scalar(-1)));
  EXPECT_TRUE(r.c.is_zero());
}

TEST(Solve, FlatIsLineWithLambda2Zero) {
  Ein2Solution s = is_ein2(StructureConstants());
  EXPECT_EQ(s.kind, Ein2Solution::Kind::line);
  EXPECT_TRUE(s.free_lambda1_at(Scalar()));
  EXPECT_TRUE(s.contains(Scalar(17), Scalar()));
  EXPECT_FALSE(s.contains(Scalar(0), Scalar(1)));
}

TEST(Solve, G2Point) {
  Ein2Solution s = is_ein2(build_family(point(Family::G2, 2, 1, 1)));
  ASSERT_EQ(s.kind, Ein2Solution::Kind::point);
  EXPECT_EQ(s.point->l1.rational(), 4);  // α²/2 + 2γ²
  EXPECT_EQ(s.point->l2.rational(), 0);
  EXPECT_TRUE(s.residual.is_zero());
}

TEST(Solve, G1NoSolution) {
  Ein2Solution s = is_ein2(build_family(point(Family::G1, 1, 1)));
  EXPECT_EQ(s.kind, Ein2Solution::Kind::none);
  ASSERT_TRUE(s.best_fit.has_value());
  EXPECT_GT(s.residual.value(), 0);
  EXPECT_TRUE(s.residual == sup_residual(system_of(point(Family::G1, 1, 1)), s.best_fit->l1, s.best_fit->l2));
}

TEST(Solve, ChebyshevFitIsOptimalOnSmallSystem) {
  // λ₁ = 0 and λ₁ = 2 in two rows: best sup-norm is 1 at λ₁ = 1
  Ein2System sys = rows({{{0, 1, 0}}, {{-2, 1, 0}}, {{0, 0, 1}}});
  Ein2Solution s = solve_lambdas(sys);
  ASSERT_EQ(s.kind, Ein2Solution::Kind::none);
  EXPECT_EQ(s.residual.rational(), 1);
  EXPECT_EQ(s.best_fit->l1.rational(), 1);
}

TEST(Solve, RankTwoPointAndConsistency) {
  Ein2System sys = rows({{{-3, 1, 0}}, {{-5, 1, 1}}, {{-8, 2, 1}}});
  Ein2Solution s = solve_lambdas(sys);
  ASSERT_EQ(s.kind, Ein2Solution::Kind::point);
  EXPECT_EQ(s.point->l1.rational(), 3);
  EXPECT_EQ(s.point->l2.rational(), 2);
  EXPECT_TRUE(s.has_lambda2(Scalar(2)));
  EXPECT_FALSE(s.has_lambda2(Scalar(1)));
}

TEST(Solve, AllZeroRowsArePlane) {
  Ein2System sys;
  Ein2Solution s = solve_lambdas(sys);
  EXPECT_EQ(s.kind, Ein2Solution::Kind::plane);
  EXPECT_TRUE(s.contains(Scalar(5), Scalar(-2)));
  EXPECT_TRUE(s.free_lambda1_at(Scalar(3)));
}

TEST(IsEin2, Examples) {
  Ein2Solution a = is_ein2(build_family(point(Family::G1, Scalar::ratio(3, 2), 0)));
  ASSERT_EQ(a.kind, Ein2Solution::Kind::point);
  EXPECT_TRUE(a.point->l1.is_zero() && a.point->l2.is_zero());
  Ein2Solution b = is_ein2(build_family(point(Family::G4, 0, 1, 0, 0, 1)));
  EXPECT_TRUE(b.is_ein2());
  EXPECT_TRUE(b.has_lambda2(Scalar()));
}

TEST(IsEin2, ApproxModeTracksExact) {
  FamilyParams p = point(Family::G2, 4, 2, 1);
  Ein2Solution exact = is_ein2(build_family(p));
  p.alpha = p.alpha.to_approx();
  p.beta = p.beta.to_approx();
  p.gamma = p.gamma.to_approx();
  Ein2Solution approx = is_ein2(build_family(p));
  ASSERT_EQ(exact.kind, approx.kind);
  EXPECT_LE(std::fabs(approx.point->l1.value() - exact.point->l1.value()), 1e-9L);
  EXPECT_LE(approx.residual.value(), 1e-9L);
}

TEST(MatchPrinted, Examples) {
  EXPECT_TRUE(match_printed_system(point(Family::G1, 1, 2)));
  EXPECT_TRUE(match_printed_system(point(Family::G5, 1, 0, 0, 1)));
  EXPECT_TRUE(match_printed_system(point(Family::G3, 1, 2, 3)));
  EXPECT_EQ(printed_system(point(Family::G1, 1, 2)).size(), 5u);
}

TEST(MatchPrinted, PrintedTablesAgreeAtSpotPoints) {
  FamilyParams p = point(Family::G4, Scalar::ratio(1, 2), 3, 0, 0, -1);
  EXPECT_TRUE(printed_connection(p).raw() == levi_civita(build_family(p)).raw());
  EXPECT_TRUE(printed_ricci_operator(p) == ricci(build_family(p)).rho_op);
  EXPECT_TRUE(match_printed_system(p));
}

}  // namespace
}  // namespace ein2
