#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ein2/verify.hpp"

namespace ein2 {

struct SuiteOptions {
  std::uint64_t seed = kDefaultSeed;
  std::size_t branch_samples = 50;
  std::size_t fidelity_samples = 100;
  std::size_t negative_samples = 1000;
  /// delta verdicts are always computed; metric additionally lists discrepancies.
  Convention convention = Convention::delta;
  double tolerance = kDefaultTolerance;
  /// Restrict the run to one theorem ("2.3", ..., "3.6") and its family.
  std::optional<std::string> theorem;
};

/// Tables, Ricci matrix, printed system and frame invariants at random points.
struct FidelityReport {
  Family family = Family::G1;
  std::size_t samples = 0;
  std::size_t connection_mismatches = 0;
  std::size_t ricci_mismatches = 0;
  std::size_t system_mismatches = 0;
  std::size_t invariant_failures = 0;
  std::vector<std::string> notes;

  bool passed() const {
    return samples > 0 && connection_mismatches == 0 && ricci_mismatches == 0 && system_mismatches == 0 &&
           invariant_failures == 0;
  }
};

/// A worked example with closed-form irrational λ values.
struct RemarkReport {
  std::string name;
  std::string branch;
  FamilyParams params;
  std::string defining_equation;
  std::string expected_text;
  long double expected_l1 = 0;
  long double expected_l2 = 0;
  std::optional<Lambdas> solver;
  long double error_l1 = 0;
  long double error_l2 = 0;
  double tolerance = 1e-12;
  bool passed = false;
};

/// Random valid points matching no branch; all must be non-Ein(2).
struct NegativeReport {
  Family family = Family::G1;
  std::size_t samples = 0;
  std::size_t draws = 0;
  std::size_t false_positives = 0;
  std::optional<FamilyParams> counterexample;
  std::optional<Ein2Solution> counterexample_solution;

  bool passed() const { return samples > 0 && false_positives == 0; }
};

/// Samples whose stated λ holds under delta but not under metric.
struct ConventionDiscrepancy {
  std::string branch;
  std::size_t samples = 0;
  std::size_t mismatched = 0;
  FamilyParams example;
  Ein2Solution delta_solution;
  Ein2Solution metric_solution;
};

struct SuiteReport {
  SuiteOptions options;
  std::vector<FidelityReport> fidelity;
  std::vector<BranchReport> branches;
  std::vector<RemarkReport> remarks;
  std::vector<NegativeReport> negatives;
  std::vector<ConventionDiscrepancy> discrepancies;
  bool passed = false;
};

/// Every sub-run uses its own stream derived from options.seed.
SuiteReport run_suite(const SuiteOptions& options);

FidelityReport check_fidelity(Family family, std::size_t samples, std::uint64_t seed);
NegativeReport sample_negatives(Family family, std::size_t samples, std::uint64_t seed);
RemarkReport g5_remark();
RemarkReport g6_remark();

}  // namespace ein2
