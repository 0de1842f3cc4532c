#include <gtest/gtest.h>

#include "ein2/errors.hpp"
#include "ein2/liealg.hpp"
#include "ein2/sampling.hpp"

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

Vec3 vec(Scalar x, Scalar y, Scalar z) {
  Vec3 v;
  v(0) = x;
  v(1) = y;
  v(2) = z;
  return v;
}

TEST(BuildFamily, G1Brackets) {
  // [e1,e2] = αe1 − βe3, [e1,e3] = −αe1 − βe2, [e2,e3] = βe1 + αe2 + αe3 at α = 1, β = 2
  StructureConstants sc = build_family(point(Family::G1, 1, 2));
  EXPECT_TRUE(sc.bracket(0, 1) == vec(1, 0, -2));
  EXPECT_TRUE(sc.bracket(0, 2) == vec(-1, -2, 0));
  EXPECT_TRUE(sc.bracket(1, 2) == vec(2, 1, 1));
  EXPECT_TRUE(sc.bracket(1, 0) == vec(-1, 0, 2));
}

TEST(BuildFamily, G5ConstraintViolation) {
  try {
    build_family(point(Family::G5, 1, 1, 1, 1));
    FAIL() << "expected ConstraintViolation";
  } catch (const ConstraintViolation& e) {
    EXPECT_EQ(e.constraint(), "αγ + βδ = 0");
    EXPECT_STREQ(e.what(), "αγ + βδ = 0 violated");
  }
}

TEST(BuildFamily, G3AllZeroIsAbelian) {
  StructureConstants sc = build_family(point(Family::G3, 0, 0, 0));
  EXPECT_TRUE(sc.raw().is_zero());
}

TEST(FromRaw, ZeroArrayIsAbelian) {
  StructureConstants sc = StructureConstants::from_raw(Tensor<3>{});
  EXPECT_TRUE(sc.raw().is_zero());
  EXPECT_TRUE(sc.raw() == StructureConstants().raw());
}

TEST(FromRaw, RoundTripsFamilyOutput) {
  StructureConstants a = build_family(point(Family::G1, 1, 0));
  StructureConstants b = StructureConstants::from_raw(a.raw());
  EXPECT_TRUE(a.raw() == b.raw());
}

TEST(FromRaw, RejectsSymmetricEntry) {
  Tensor<3> t;
  t(0, 1, 0) = 1;
  t(1, 0, 0) = 1;
  try {
    StructureConstants::from_raw(t);
    FAIL() << "expected AntisymmetryViolation";
  } catch (const AntisymmetryViolation& e) {
    EXPECT_EQ(e.index()[2], 0u);
  }
}

TEST(FromRaw, RejectsNonzeroDiagonal) {
  Tensor<3> t;
  t(2, 2, 1) = Scalar::ratio(1, 3);
  EXPECT_THROW(StructureConstants::from_raw(t), AntisymmetryViolation);
}

TEST(Jacobi, G2Holds) {
  StructureConstants sc = build_family(point(Family::G2, 1, 1, 1));
  EXPECT_TRUE(jacobi_residual(sc).is_zero());
  EXPECT_TRUE(satisfies_jacobi(sc));
}

TEST(Jacobi, AbelianHolds) { EXPECT_TRUE(jacobi_residual(StructureConstants()).is_zero()); }

TEST(Jacobi, DetectsViolation) {
  // [[e1,e2],e3] + [[e2,e3],e1] + [[e3,e1],e2] = 0 − e1 + 0
  Tensor<3> t;
  t(0, 1, 0) = 1;
  t(1, 0, 0) = -1;
  t(1, 2, 1) = 1;
  t(2, 1, 1) = -1;
  StructureConstants sc = StructureConstants::from_raw(t);
  EXPECT_FALSE(satisfies_jacobi(sc));
  Tensor<4> j = jacobi_residual(sc);
  EXPECT_EQ(j(0, 1, 2, 0).rational(), Rational(-1));
}

TEST(Jacobi, HeisenbergLikeExampleStillHolds) {
  // [e1,e2] = e3, [e1,e3] = e2 is a Lie algebra (its cyclic sums all cancel)
  Tensor<3> t;
  t(0, 1, 2) = 1;
  t(1, 0, 2) = -1;
  t(0, 2, 1) = 1;
  t(2, 0, 1) = -1;
  EXPECT_TRUE(satisfies_jacobi(StructureConstants::from_raw(t)));
}

TEST(Unimodular, FamiliesMatchTheirSection) {
  EXPECT_TRUE(unimodular(build_family(point(Family::G1, 1, 2))));
  EXPECT_FALSE(unimodular(build_family(point(Family::G5, 1, 0, 0, 1))));
  EXPECT_TRUE(unimodular(StructureConstants()));
  for (Family f : kAllFamilies) {
    Sampler s(derive_seed(11, static_cast<std::uint64_t>(f)));
    for (int n = 0; n < 20; ++n) {
      FamilyParams p = random_valid_params(f, s);
      StructureConstants sc = build_family(p);
      if (sc.raw().is_zero()) continue;
      EXPECT_EQ(unimodular(sc), is_unimodular_family(f)) << to_string(f);
    }
  }
}

TEST(ValidateParams, Examples) {
  try {
    validate_params(point(Family::G1, 0, 1));
    FAIL();
  } catch (const ConstraintViolation& e) {
    EXPECT_EQ(e.constraint(), "α ≠ 0");
  }
  EXPECT_NO_THROW(validate_params(point(Family::G7, 1, 3, 0, 1)));
  EXPECT_NO_THROW(validate_params(point(Family::G6, 1, 2, 2, 1)));
  EXPECT_EQ(violated_constraint(point(Family::G6, 1, 2, 1, 2)), "αγ − βδ = 0");
  EXPECT_EQ(violated_constraint(point(Family::G7, 1, 0, 1, 0)), "αγ = 0");
  EXPECT_EQ(violated_constraint(point(Family::G7, 1, 0, 0, -1)), "α + δ ≠ 0");
  EXPECT_EQ(violated_constraint(point(Family::G4, 1, 1, 0, 0, 3)), "η = 1 or −1");
}

TEST(Families, ParameterNames) {
  EXPECT_EQ(family_parameter_names(Family::G1), (std::vector<std::string>{"alpha", "beta"}));
  EXPECT_EQ(family_parameter_names(Family::G4), (std::vector<std::string>{"alpha", "beta", "eta"}));
  EXPECT_EQ(family_parameter_names(Family::G7).size(), 4u);
  EXPECT_EQ(parse_family("G6"), Family::G6);
  EXPECT_THROW(parse_family("G8"), UnknownFamily);
}

TEST(Sampling, SameSeedSameSequence) {
  for (Family f : kAllFamilies) {
    Sampler a(99);
    Sampler b(99);
    for (int n = 0; n < 30; ++n) {
      FamilyParams p = random_valid_params(f, a);
      FamilyParams q = random_valid_params(f, b);
      EXPECT_TRUE(p.alpha == q.alpha && p.beta == q.beta && p.gamma == q.gamma && p.delta == q.delta &&
                  p.eta == q.eta);
      EXPECT_FALSE(violated_constraint(p).has_value());
      EXPECT_TRUE(p.is_exact());
    }
  }
}

TEST(Sampling, GridRange) {
  Sampler s(1);
  for (int n = 0; n < 500; ++n) {
    Rational q = s.grid().rational();
    EXPECT_LE(abs(q.get_num()), 9);
    EXPECT_LE(q.get_den(), 4);
    EXPECT_NE(s.grid_nonzero().rational(), 0);
  }
  EXPECT_NE(derive_seed(7, 1), derive_seed(7, 2));
  EXPECT_EQ(derive_seed(7, 1), derive_seed(7, 1));
}

TEST(Sampling, OverridesArePinned) {
  Sampler s(3, {{"beta", Scalar(5)}});
  EXPECT_TRUE(s.pinned("beta"));
  EXPECT_EQ(s.param("beta").rational(), Rational(5));
  EXPECT_FALSE(s.pinned("alpha"));
}

}  // namespace
}  // namespace ein2
