#include <gtest/gtest.h>

#include "ein2/branches.hpp"
#include "oracle.hpp"

namespace ein2 {
namespace {

using oracle::Q;

bool same_tensor(const Tensor<3>& t, const oracle::T3& o) {
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = 0; j < kDim; ++j)
      for (std::size_t k = 0; k < kDim; ++k) {
        if (t(i, j, k).rational() != o[i][j][k]) return false;
      }
  return true;
}

bool same_matrix(const Mat3& m, const oracle::M3& o) {
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = 0; j < kDim; ++j) {
      if (m(i, j).rational() != o[i][j]) return false;
    }
  return true;
}

void expect_agreement(const StructureConstants& sc, const std::string& where) {
  oracle::T3 c = oracle::brackets(sc);
  ASSERT_TRUE(oracle::jacobi_holds(c)) << where;
  EXPECT_TRUE(same_tensor(levi_civita(sc).raw(), oracle::connection(c))) << where;
  oracle::Ricci o = oracle::ricci_data(c);
  RicciData rd = ricci(sc);
  EXPECT_TRUE(same_matrix(rd.rho, o.rho)) << where;
  EXPECT_TRUE(same_matrix(rd.rho_op, o.rho_op)) << where;
  EXPECT_TRUE(same_matrix(rd.rho_sq, o.rho_sq)) << where;
  for (Convention conv : {Convention::delta, Convention::metric}) {
    oracle::Solution s = oracle::solve(oracle::ein2_rows(o, conv));
    EXPECT_TRUE(oracle::agrees(s, is_ein2(sc, conv))) << where << " " << to_string(conv);
  }
}

/// c^k_ij = ε_ijl N^lk + δ^k_j a_i − δ^k_i a_j with N symmetric and N a = 0.
StructureConstants random_lie_algebra(Sampler& s) {
  std::array<Q, 3> a{};
  std::array<std::array<Q, 3>, 3> n{};
  if (s.one_in(2)) {
    for (auto& x : n)
      for (auto& y : x) y = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) n[i][j] = n[j][i] = s.grid().rational();
  } else {
    for (auto& x : a) x = s.grid().rational();
    // two vectors orthogonal to a span N
    std::array<Q, 3> u{a[1], -a[0], 0};
    std::array<Q, 3> v{a[0] * a[2], a[1] * a[2], -(a[0] * a[0] + a[1] * a[1])};
    Q lu = s.grid().rational();
    Q lv = s.grid().rational();
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) n[i][j] = lu * u[i] * u[j] + lv * v[i] * v[j];
  }
  auto levi = [](int i, int j, int l) -> int {
    if (i == j || j == l || i == l) return 0;
    return ((j - i + 3) % 3 == 1) ? 1 : -1;
  };
  Tensor<3> t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        Q v = 0;
        for (int l = 0; l < 3; ++l) v += levi(i, j, l) * n[l][k];
        if (k == j) v += a[i];
        if (k == i) v -= a[j];
        t(i, j, k) = Scalar(v);
      }
  return StructureConstants::from_raw(t);
}

TEST(Oracle, FamilySamplesAgree) {
  for (Family f : kAllFamilies) {
    Sampler s(derive_seed(31, static_cast<std::uint64_t>(f)));
    for (int n = 0; n < 40; ++n) {
      FamilyParams p = random_valid_params(f, s);
      expect_agreement(build_family(p), to_string(f) + " #" + std::to_string(n));
    }
  }
}

TEST(Oracle, ExactBranchSamplesAgree) {
  for (const auto& b : branch_catalog()) {
    if (b.irrational) continue;
    for (const auto& p : sample_branch(b, 10, 41)) expect_agreement(build_family(p), b.id);
  }
}

TEST(Oracle, ArbitraryLieAlgebrasAgree) {
  Sampler s(51);
  for (int n = 0; n < 200; ++n) {
    StructureConstants sc = random_lie_algebra(s);
    ASSERT_TRUE(satisfies_jacobi(sc));
    expect_agreement(sc, "random #" + std::to_string(n));
  }
}

TEST(Oracle, JacobiCheckersAgreeOnRandomArrays) {
  Sampler s(61);
  int failures = 0;
  for (int n = 0; n < 300; ++n) {
    Tensor<3> t;
    for (std::size_t i = 0; i < kDim; ++i)
      for (std::size_t j = i + 1; j < kDim; ++j)
        for (std::size_t k = 0; k < kDim; ++k) {
          Scalar v = s.one_in(2) ? Scalar() : s.grid();
          t(i, j, k) = v;
          t(j, i, k) = -v;
        }
    StructureConstants sc = StructureConstants::from_raw(t);
    bool expected = oracle::jacobi_holds(oracle::brackets(sc));
    EXPECT_EQ(satisfies_jacobi(sc), expected);
    failures += expected ? 0 : 1;
  }
  EXPECT_GT(failures, 0);
}

TEST(Oracle, EliminationOnHandSystems) {
  std::array<std::array<Q, 3>, 6> rows{};
  rows[0] = {Q(-3), Q(1), Q(0)};
  rows[1] = {Q(-5), Q(1), Q(1)};
  oracle::Solution s = oracle::solve(rows);
  ASSERT_EQ(s.kind, Ein2Solution::Kind::point);
  EXPECT_EQ((*s.point)[0], 3);
  EXPECT_EQ((*s.point)[1], 2);
  rows[2] = {Q(1), Q(0), Q(0)};
  EXPECT_EQ(oracle::solve(rows).kind, Ein2Solution::Kind::none);
  std::array<std::array<Q, 3>, 6> flat{};
  flat[0] = {Q(0), Q(0), Q(1)};
  EXPECT_EQ(oracle::solve(flat).kind, Ein2Solution::Kind::line);
}

}  // namespace
}  // namespace ein2
