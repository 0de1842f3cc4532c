#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ein2/branches.hpp"

namespace ein2 {

/// Result of matching one parameter point against the branch catalog.
struct Classification {
  enum class Status {
    matched,       // some branch holds and the solver finds a solution
    not_ein2,      // no branch holds and the solver finds none
    inconsistent,  // branch membership and solver verdict disagree
  };

  std::vector<std::string> branches;
  Ein2Solution solution;
  Status status = Status::not_ein2;
};

std::string to_string(Classification::Status s);

/// Throws ConstraintViolation.
Classification classify(const FamilyParams& p, Convention convention = Convention::delta);

struct SampleFailure {
  std::size_t index = 0;
  FamilyParams params;
  /// Stated (λ₁, λ₂); empty for λ₁-free branches.
  std::optional<Lambdas> expected;
  Ein2Solution solution;
  std::string reason;
};

/// A branch whose stated λ fails while the recomputed λ holds on every sample.
struct Erratum {
  std::string branch;
  std::string printed;
  std::string recomputed;
  FamilyParams counterexample;
  Lambdas printed_value;
  Lambdas recomputed_value;
  Ein2Solution solution;
};

struct BranchReport {
  enum class Verdict { verified, errata, inconclusive };

  std::string id;
  std::string theorem;
  Family family = Family::G1;
  std::string constraints;
  std::string expected;
  std::string defining_equation;
  Convention convention = Convention::delta;
  std::size_t attempted = 0;
  std::size_t passed = 0;
  /// Largest solver residual over the samples.
  Scalar max_residual;
  /// Quadratic in α² at the first sample, for quartic-constrained branches.
  std::string first_quadratic;
  std::vector<SampleFailure> failures;
  std::optional<Erratum> erratum;
  Verdict verdict = Verdict::inconclusive;
  /// Set when sampling failed.
  std::string note;
};

std::string to_string(BranchReport::Verdict v);

/// The solution is nonempty and contains the branch's stated (λ₁, λ₂).
bool stated_lambdas_hold(const BranchSpec& spec, const FamilyParams& p, const Ein2Solution& sol);

/**
 * Samples the branch and checks that every point is Ein(2) and that the stated
 * (λ₁, λ₂) lies in the solution set. Failures are recorded, never thrown.
 */
BranchReport verify_branch(const BranchSpec& spec, std::size_t count, std::uint64_t seed,
                           Convention convention = Convention::delta, double tol = kDefaultTolerance,
                           const ParamOverrides& overrides = {});

}  // namespace ein2
