#include "ein2/verify.hpp"

namespace ein2 {

std::string to_string(Classification::Status s) {
  switch (s) {
    case Classification::Status::matched:
      return "matched";
    case Classification::Status::not_ein2:
      return "not_ein2";
    case Classification::Status::inconsistent:
      return "inconsistent";
  }
  return "inconsistent";
}

std::string to_string(BranchReport::Verdict v) {
  switch (v) {
    case BranchReport::Verdict::verified:
      return "verified";
    case BranchReport::Verdict::errata:
      return "errata";
    case BranchReport::Verdict::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

bool stated_lambdas_hold(const BranchSpec& spec, const FamilyParams& p, const Ein2Solution& sol) {
  if (!sol.is_ein2()) return false;
  if (spec.expected.lambda1_free) return sol.free_lambda1_at(Scalar());
  Lambdas expected = spec.expected.value(p);
  return sol.contains(expected.l1, expected.l2);
}

Classification classify(const FamilyParams& p, Convention convention) {
  validate_params(p);
  Classification out;
  out.solution = is_ein2(build_family(p), convention);
  for (const auto* spec : branches_of_family(p.family)) {
    if (spec->member(p)) out.branches.push_back(spec->id);
  }
  const bool matched = !out.branches.empty();
  if (matched == out.solution.is_ein2()) {
    out.status = matched ? Classification::Status::matched : Classification::Status::not_ein2;
  } else {
    out.status = Classification::Status::inconsistent;
  }
  return out;
}

BranchReport verify_branch(const BranchSpec& spec, std::size_t count, std::uint64_t seed, Convention convention,
                           double tol, const ParamOverrides& overrides) {
  BranchReport report;
  report.id = spec.id;
  report.theorem = spec.theorem;
  report.family = spec.family;
  report.constraints = spec.constraints;
  report.expected = spec.expected.text;
  report.defining_equation = spec.defining_equation;
  report.convention = convention;

  std::vector<FamilyParams> samples;
  try {
    samples = sample_branch(spec, count, seed, overrides, tol);
  } catch (const EmptyBranch& e) {
    report.note = e.what();
    return report;
  }
  report.attempted = samples.size();
  if (spec.quadratic) report.first_quadratic = format_quadratic(spec.quadratic(samples.front()));

  std::vector<Ein2Solution> solutions;
  solutions.reserve(samples.size());
  for (std::size_t idx = 0; idx < samples.size(); ++idx) {
    const FamilyParams& p = samples[idx];
    Ein2Solution sol = is_ein2(build_family(p), convention);
    if (sol.residual.value() > report.max_residual.value()) report.max_residual = sol.residual;

    SampleFailure failure;
    failure.index = idx;
    failure.params = p;
    bool ok = sol.is_ein2();
    if (!ok) {
      failure.reason = "no (λ₁, λ₂) solves the system";
    } else if (spec.expected.lambda1_free) {
      ok = sol.free_lambda1_at(Scalar());
      if (!ok) failure.reason = "λ₁ is not free with λ₂ = 0";
    } else {
      Lambdas expected = spec.expected.value(p);
      failure.expected = expected;
      ok = sol.contains(expected.l1, expected.l2);
      if (!ok) failure.reason = "stated (λ₁, λ₂) is not in the solution set";
    }
    if (ok) {
      ++report.passed;
    } else {
      failure.solution = sol;
      report.failures.push_back(std::move(failure));
    }
    solutions.push_back(std::move(sol));
  }

  if (report.failures.empty()) {
    report.verdict = BranchReport::Verdict::verified;
    return report;
  }
  report.verdict = BranchReport::Verdict::inconclusive;
  if (!spec.rederived || spec.expected.lambda1_free) return report;
  for (std::size_t idx = 0; idx < samples.size(); ++idx) {
    if (!solutions[idx].is_ein2()) return report;
    Lambdas r = spec.rederived->value(samples[idx]);
    if (!solutions[idx].contains(r.l1, r.l2)) return report;
  }
  const SampleFailure& first = report.failures.front();
  Erratum e;
  e.branch = spec.id;
  e.printed = spec.expected.text;
  e.recomputed = spec.rederived->text;
  e.counterexample = first.params;
  e.printed_value = *first.expected;
  e.recomputed_value = spec.rederived->value(first.params);
  e.solution = first.solution;
  report.erratum = std::move(e);
  report.verdict = BranchReport::Verdict::errata;
  return report;
}

}  // namespace ein2
