#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ein2/sampling.hpp"
#include "ein2/system.hpp"

namespace ein2 {

using LambdaFn = std::function<Lambdas(const FamilyParams&)>;

/// Stated (λ₁, λ₂) of a branch.
struct LambdaSpec {
  std::string text;
  /// λ₂ = 0 with λ₁ left unconstrained.
  bool lambda1_free = false;
  /// Set when !lambda1_free.
  LambdaFn value;
};

/// λ recomputed from the case identities of the family's own derivation.
struct Rederivation {
  std::string text;
  LambdaFn value;
};

/// Coefficients (c2, c1, c0) of c2 x² + c1 x + c0 = 0 in x = α².
using Quadratic = std::array<Scalar, 3>;

/**
 * @brief One branch of a classification theorem.
 *
 * `member` tests the printed constraints exactly (with tolerance for
 * approximate points). `draw` proposes a point with the branch equalities
 * already substituted; sample_branch discards proposals that fail the family
 * or branch constraints.
 */
struct BranchSpec {
  std::string id;
  std::string theorem;
  Family family = Family::G1;
  std::string constraints;
  /// Samples need irrational coordinates and are carried approximately.
  bool irrational = false;
  /// Implicit relation text for branches fixed by a polynomial in α.
  std::string defining_equation;
  LambdaSpec expected;
  std::optional<Rederivation> rederived;
  std::function<bool(const FamilyParams&)> member;
  std::function<std::optional<FamilyParams>(Sampler&, double tol)> draw;
  /// Quadratic in α² at a sample point (quartic-constrained branches only).
  std::function<Quadratic(const FamilyParams&)> quadratic;
};

/// All 30 branches, grouped by theorem in printed order.
const std::vector<BranchSpec>& branch_catalog();

/// Throws std::invalid_argument for an unknown id.
const BranchSpec& find_branch(std::string_view id);
/// Theorem ids in printed order: "2.3", "2.5", "2.7", "2.9", "3.2", "3.4", "3.6".
const std::vector<std::string>& theorem_ids();
/// Throws std::invalid_argument for an unknown theorem.
Family theorem_family(std::string_view theorem);
std::vector<const BranchSpec*> branches_of_theorem(std::string_view theorem);
std::vector<const BranchSpec*> branches_of_family(Family f);

/// Minimum number of proposals sample_branch makes before giving up.
inline constexpr std::size_t kMinDrawBudget = 10000;

/**
 * Up to `count` points of the branch, deterministic in `seed`. Pinned entries
 * of `overrides` replace the corresponding draws. Makes at most
 * max(kMinDrawBudget, 100 * count) proposals and throws EmptyBranch when none
 * of them is valid.
 */
std::vector<FamilyParams> sample_branch(const BranchSpec& spec, std::size_t count, std::uint64_t seed,
                                        const ParamOverrides& overrides = {},
                                        double tol = kDefaultTolerance);

std::string format_quadratic(const Quadratic& q);

}  // namespace ein2
