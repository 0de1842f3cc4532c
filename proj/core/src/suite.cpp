#include "ein2/suite.hpp"

#include <cmath>

#include "ein2/printed.hpp"

namespace ein2 {

namespace {

// stream ids for derive_seed
constexpr std::uint64_t kFidelityStream = 100;
constexpr std::uint64_t kBranchStream = 200;
constexpr std::uint64_t kNegativeStream = 300;

bool frame_invariants_hold(const StructureConstants& sc, std::string& what) {
  if (!satisfies_jacobi(sc)) {
    what = "Jacobi";
    return false;
  }
  ConnectionCoefficients conn = levi_civita(sc);
  if (!torsion_residual(sc, conn).is_zero()) {
    what = "torsion";
    return false;
  }
  if (!metric_residual(conn).is_zero()) {
    what = "metric compatibility";
    return false;
  }
  CurvatureTensor curv = curvature(sc, conn);
  if (!bianchi_residual(curv).is_zero()) {
    what = "first Bianchi";
    return false;
  }
  RicciData rd = ricci_from_curvature(curv);
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = 0; j < kDim; ++j) {
      if (!(rd.rho(i, j) == rd.rho(j, i))) {
        what = "Ricci symmetry";
        return false;
      }
      Scalar lhs = Scalar(FrameMetric::eps(j)) * rd.rho_op(i, j);
      Scalar rhs = Scalar(FrameMetric::eps(i)) * rd.rho_op(j, i);
      if (!(lhs == rhs)) {
        what = "Ricci operator self-adjointness";
        return false;
      }
    }
  }
  return true;
}

std::string describe(const FamilyParams& p) {
  std::string out = to_string(p.family);
  for (const auto& name : family_parameter_names(p.family)) {
    out += " " + name + "=";
    if (name == "alpha") out += p.alpha.to_string();
    if (name == "beta") out += p.beta.to_string();
    if (name == "gamma") out += p.gamma.to_string();
    if (name == "delta") out += p.delta.to_string();
    if (name == "eta") out += std::to_string(p.eta);
  }
  return out;
}

bool matches_any_branch(const FamilyParams& p) {
  for (const auto* spec : branches_of_family(p.family)) {
    if (spec->member(p)) return true;
  }
  return false;
}

RemarkReport finish_remark(RemarkReport r) {
  Ein2Solution sol = is_ein2(build_family(r.params), Convention::delta);
  if (sol.kind == Ein2Solution::Kind::point) {
    r.solver = sol.point;
    r.error_l1 = std::fabs(sol.point->l1.value() - r.expected_l1);
    r.error_l2 = std::fabs(sol.point->l2.value() - r.expected_l2);
    r.passed = r.error_l1 <= r.tolerance && r.error_l2 <= r.tolerance;
  }
  return r;
}

}  // namespace

FidelityReport check_fidelity(Family family, std::size_t samples, std::uint64_t seed) {
  FidelityReport report;
  report.family = family;
  Sampler sampler(seed);
  for (std::size_t n = 0; n < samples; ++n) {
    FamilyParams p = random_valid_params(family, sampler);
    ++report.samples;
    StructureConstants sc = build_family(p);
    std::string what;
    if (!frame_invariants_hold(sc, what) || unimodular(sc) != is_unimodular_family(family)) {
      ++report.invariant_failures;
      report.notes.push_back((what.empty() ? "unimodularity" : what) + " fails at " + describe(p));
      continue;
    }
    if (!(levi_civita(sc).raw() == printed_connection(p).raw())) {
      ++report.connection_mismatches;
      report.notes.push_back("connection table differs at " + describe(p));
    }
    if (!(ricci(sc).rho_op == printed_ricci_operator(p))) {
      ++report.ricci_mismatches;
      report.notes.push_back("Ricci operator differs at " + describe(p));
    }
    if (!match_printed_system(p)) {
      ++report.system_mismatches;
      report.notes.push_back("printed system differs at " + describe(p));
    }
  }
  return report;
}

NegativeReport sample_negatives(Family family, std::size_t samples, std::uint64_t seed) {
  NegativeReport report;
  report.family = family;
  Sampler sampler(seed);
  const std::size_t budget = 100 * samples + kMinDrawBudget;
  while (report.samples < samples && report.draws < budget) {
    ++report.draws;
    FamilyParams p = random_valid_params(family, sampler);
    if (matches_any_branch(p)) continue;
    ++report.samples;
    Ein2Solution sol = is_ein2(build_family(p), Convention::delta);
    if (sol.is_ein2()) {
      ++report.false_positives;
      if (!report.counterexample) {
        report.counterexample = p;
        report.counterexample_solution = sol;
      }
    }
  }
  return report;
}

RemarkReport g5_remark() {
  RemarkReport r;
  r.name = "G5 example";
  r.branch = "3.2(iv)";
  const long double root405 = std::sqrt(405.0L);
  const long double a2 = (5.0L + root405) / 76.0L;
  const long double a = std::sqrt(a2);
  r.params.family = Family::G5;
  r.params.alpha = Scalar::approx(a);
  r.params.beta = Scalar(-1);
  r.params.gamma = Scalar(2);
  r.params.delta = Scalar::approx(2.0L * a);
  r.defining_equation = "β = −1, γ = 2, δ = 2α, 76α⁴ − 10α² − 5 = 0, α² = (5 + √405)/76";
  r.expected_text = "λ₁ = −(45 + 9√405)/76, λ₂ = 18α⁴ − (9/2)α² − 9/4";
  r.expected_l1 = -(45.0L + 9.0L * root405) / 76.0L;
  r.expected_l2 = 18.0L * a2 * a2 - 4.5L * a2 - 2.25L;
  return finish_remark(r);
}

RemarkReport g6_remark() {
  RemarkReport r;
  r.name = "G6 example";
  r.branch = "3.4(vii)";
  const long double root10 = std::sqrt(10.0L);
  const long double a2 = (-2.0L + root10) / 6.0L;
  const long double a = std::sqrt(a2);
  r.params.family = Family::G6;
  r.params.alpha = Scalar::approx(a);
  r.params.beta = Scalar(1);
  r.params.gamma = Scalar(2);
  r.params.delta = Scalar::approx(2.0L * a);
  r.defining_equation = "β = 1, γ = 2, δ = 2α, 3α⁴ + 2α² − 1/2 = 0, α² = (−2 + √10)/6";
  r.expected_text = "λ₁ = (4√10 − 5)/3, λ₂ = (37 − 8√10)/12";
  r.expected_l1 = (4.0L * root10 - 5.0L) / 3.0L;
  r.expected_l2 = (37.0L - 8.0L * root10) / 12.0L;
  return finish_remark(r);
}

SuiteReport run_suite(const SuiteOptions& options) {
  SuiteReport report;
  report.options = options;

  std::vector<Family> families(kAllFamilies.begin(), kAllFamilies.end());
  if (options.theorem) families = {theorem_family(*options.theorem)};

  for (Family f : families) {
    auto idx = static_cast<std::uint64_t>(f);
    report.fidelity.push_back(
        check_fidelity(f, options.fidelity_samples, derive_seed(options.seed, kFidelityStream + idx)));
  }

  const auto& catalog = branch_catalog();
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    const BranchSpec& spec = catalog[i];
    if (options.theorem && spec.theorem != *options.theorem) continue;
    const std::uint64_t seed = derive_seed(options.seed, kBranchStream + i);
    report.branches.push_back(
        verify_branch(spec, options.branch_samples, seed, Convention::delta, options.tolerance));
    if (options.convention != Convention::metric) continue;
    std::vector<FamilyParams> samples;
    try {
      samples = sample_branch(spec, options.branch_samples, seed, {}, options.tolerance);
    } catch (const EmptyBranch&) {
      continue;
    }
    ConventionDiscrepancy d;
    d.branch = spec.id;
    d.samples = samples.size();
    for (const auto& p : samples) {
      StructureConstants sc = build_family(p);
      Ein2Solution sd = is_ein2(sc, Convention::delta);
      Ein2Solution sm = is_ein2(sc, Convention::metric);
      if (stated_lambdas_hold(spec, p, sd) == stated_lambdas_hold(spec, p, sm)) continue;
      if (d.mismatched++ == 0) {
        d.example = p;
        d.delta_solution = sd;
        d.metric_solution = sm;
      }
    }
    if (d.mismatched > 0) report.discrepancies.push_back(std::move(d));
  }

  if (!options.theorem || *options.theorem == "3.2") report.remarks.push_back(g5_remark());
  if (!options.theorem || *options.theorem == "3.4") report.remarks.push_back(g6_remark());

  for (Family f : families) {
    auto idx = static_cast<std::uint64_t>(f);
    report.negatives.push_back(
        sample_negatives(f, options.negative_samples, derive_seed(options.seed, kNegativeStream + idx)));
  }

  bool ok = true;
  for (const auto& r : report.fidelity) ok = ok && r.passed();
  for (const auto& r : report.branches) ok = ok && r.verdict != BranchReport::Verdict::inconclusive;
  for (const auto& r : report.remarks) ok = ok && r.passed;
  for (const auto& r : report.negatives) ok = ok && r.passed();
  report.passed = ok;
  return report;
}

}  // namespace ein2
