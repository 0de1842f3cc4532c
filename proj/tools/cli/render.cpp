#include "cli/render.hpp"

#include <cstdio>
#include <sstream>

namespace ein2::cli {

namespace {

const char* const kFrameNames[kDim] = {"e1", "e2", "e3"};

std::string mode_name(const JobConfig& cfg) { return cfg.approx ? "approx" : "exact"; }

Json header(const std::string& command, const JobConfig& cfg) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["convention"] = to_string(cfg.convention);
  j["mode"] = mode_name(cfg);
  j["tolerance"] = cfg.tol;
  return j;
}

Json lambdas_json(const Lambdas& l) { return Json{{"lambda1", scalar_json(l.l1)}, {"lambda2", scalar_json(l.l2)}}; }

Json matrix_json(const Mat3& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < kDim; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < kDim; ++j) row.push_back(scalar_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Json tensor3_json(const Tensor<3>& t) {
  Json out = Json::array();
  for (std::size_t i = 0; i < kDim; ++i) {
    Json a = Json::array();
    for (std::size_t j = 0; j < kDim; ++j) {
      Json b = Json::array();
      for (std::size_t k = 0; k < kDim; ++k) b.push_back(scalar_json(t(i, j, k)));
      a.push_back(b);
    }
    out.push_back(a);
  }
  return out;
}

Json input_json(const Derivation& d) {
  Json j;
  if (d.params) {
    j["kind"] = "family";
    j["params"] = params_json(*d.params);
  } else {
    j["kind"] = "raw";
    j["path"] = d.raw_path.value_or("");
  }
  return j;
}

std::string two(const Scalar& a, const Scalar& b) { return "(" + a.to_string() + ", " + b.to_string() + ")"; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

std::string long_double_text(long double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17Lg", v);
  return buf;
}

void matrix_text(std::ostream& os, const std::string& name, const Mat3& m) {
  os << name << ":\n";
  for (std::size_t i = 0; i < kDim; ++i) {
    os << "  [";
    for (std::size_t j = 0; j < kDim; ++j) os << (j ? ", " : "") << m(i, j).to_string();
    os << "]\n";
  }
}

Json fidelity_json(const FidelityReport& f) {
  return Json{{"family", to_string(f.family)},
              {"samples", f.samples},
              {"connection_mismatches", f.connection_mismatches},
              {"ricci_mismatches", f.ricci_mismatches},
              {"system_mismatches", f.system_mismatches},
              {"invariant_failures", f.invariant_failures},
              {"notes", f.notes},
              {"passed", f.passed()}};
}

Json failure_json(const SampleFailure& s) {
  Json j{{"index", s.index}, {"params", params_json(s.params)}, {"reason", s.reason}};
  j["expected"] = s.expected ? lambdas_json(*s.expected) : Json(nullptr);
  j["solution"] = solution_json(s.solution);
  return j;
}

Json erratum_json(const Erratum& e) {
  return Json{{"branch", e.branch},
              {"printed", e.printed},
              {"recomputed", e.recomputed},
              {"counterexample", params_json(e.counterexample)},
              {"printed_value", lambdas_json(e.printed_value)},
              {"recomputed_value", lambdas_json(e.recomputed_value)},
              {"solution", solution_json(e.solution)}};
}

Json branch_json(const BranchReport& b) {
  Json j{{"id", b.id},
         {"theorem", b.theorem},
         {"family", to_string(b.family)},
         {"constraints", b.constraints},
         {"expected", b.expected},
         {"defining_equation", b.defining_equation},
         {"convention", to_string(b.convention)},
         {"attempted", b.attempted},
         {"passed", b.passed},
         {"max_residual", scalar_json(b.max_residual)},
         {"first_quadratic", b.first_quadratic},
         {"verdict", to_string(b.verdict)},
         {"note", b.note}};
  Json failures = Json::array();
  for (const auto& f : b.failures) failures.push_back(failure_json(f));
  j["failures"] = failures;
  j["erratum"] = b.erratum ? erratum_json(*b.erratum) : Json(nullptr);
  return j;
}

Json remark_json(const RemarkReport& r) {
  Json j{{"name", r.name},
         {"branch", r.branch},
         {"params", params_json(r.params)},
         {"defining_equation", r.defining_equation},
         {"expected", r.expected_text},
         {"expected_lambda1", static_cast<double>(r.expected_l1)},
         {"expected_lambda2", static_cast<double>(r.expected_l2)}};
  j["solver"] = r.solver ? lambdas_json(*r.solver) : Json(nullptr);
  j["error_lambda1"] = static_cast<double>(r.error_l1);
  j["error_lambda2"] = static_cast<double>(r.error_l2);
  j["tolerance"] = r.tolerance;
  j["passed"] = r.passed;
  return j;
}

Json negative_json(const NegativeReport& n) {
  Json j{{"family", to_string(n.family)},
         {"samples", n.samples},
         {"draws", n.draws},
         {"false_positives", n.false_positives}};
  j["counterexample"] = n.counterexample ? params_json(*n.counterexample) : Json(nullptr);
  j["counterexample_solution"] = n.counterexample_solution ? solution_json(*n.counterexample_solution) : Json(nullptr);
  j["passed"] = n.passed();
  return j;
}

Json discrepancy_json(const ConventionDiscrepancy& d) {
  return Json{{"branch", d.branch},
              {"samples", d.samples},
              {"mismatched", d.mismatched},
              {"example", params_json(d.example)},
              {"delta_solution", solution_json(d.delta_solution)},
              {"metric_solution", solution_json(d.metric_solution)}};
}

}  // namespace

Derivation derive(const StructureConstants& sc, std::optional<FamilyParams> params, const JobConfig& cfg) {
  Derivation d;
  d.params = std::move(params);
  d.raw_path = cfg.raw;
  d.sc = sc;
  d.unimodular = unimodular(sc);
  d.conn = levi_civita(sc);
  d.ricci = ricci_from_curvature(curvature(sc, d.conn));
  d.system = build_system(d.ricci, cfg.convention);
  d.solution = solve_lambdas(d.system);
  return d;
}

Json scalar_json(const Scalar& x) {
  if (x.is_exact()) return x.to_string();
  return x.to_double();
}

Json params_json(const FamilyParams& p) {
  Json j;
  j["family"] = to_string(p.family);
  for (const auto& name : family_parameter_names(p.family)) {
    if (name == "alpha") j[name] = scalar_json(p.alpha);
    if (name == "beta") j[name] = scalar_json(p.beta);
    if (name == "gamma") j[name] = scalar_json(p.gamma);
    if (name == "delta") j[name] = scalar_json(p.delta);
    if (name == "eta") j[name] = p.eta;
  }
  return j;
}

Json solution_json(const Ein2Solution& s) {
  Json j;
  j["kind"] = to_string(s.kind);
  j["ein2"] = s.is_ein2();
  if (s.point) j["point"] = lambdas_json(*s.point);
  if (s.base) j["base"] = lambdas_json(*s.base);
  if (s.direction) j["direction"] = lambdas_json(*s.direction);
  if (s.best_fit) j["best_fit"] = lambdas_json(*s.best_fit);
  j["residual"] = scalar_json(s.residual);
  return j;
}

Json derive_json(const Derivation& d, const JobConfig& cfg) {
  Json j = header("derive", cfg);
  j["input"] = input_json(d);
  j["structure_constants"] = tensor3_json(d.sc.raw());
  j["jacobi"] = true;
  j["unimodular"] = d.unimodular;
  j["connection"] = tensor3_json(d.conn.raw());
  j["ricci"] = matrix_json(d.ricci.rho);
  j["ricci_operator"] = matrix_json(d.ricci.rho_op);
  j["ricci_squared"] = matrix_json(d.ricci.rho_sq);
  Json rows = Json::array();
  for (const auto& r : d.system.rows) {
    rows.push_back(Json{
        {"i", r.i + 1}, {"j", r.j + 1}, {"a", scalar_json(r.a)}, {"b", scalar_json(r.b)}, {"c", scalar_json(r.c)}});
  }
  j["ein2_rows"] = rows;
  j["solution"] = solution_json(d.solution);
  return j;
}

Json check_json(const Derivation& d, const JobConfig& cfg) {
  Json j = header("check", cfg);
  j["input"] = input_json(d);
  j["ein2"] = d.solution.is_ein2();
  j["solution"] = solution_json(d.solution);
  return j;
}

Json classify_json(const FamilyParams& p, const Classification& c, const JobConfig& cfg) {
  Json j = header("classify", cfg);
  j["input"] = Json{{"kind", "family"}, {"params", params_json(p)}};
  j["status"] = to_string(c.status);
  j["branches"] = c.branches;
  j["ein2"] = c.solution.is_ein2();
  j["solution"] = solution_json(c.solution);
  return j;
}

Json verify_json(const SuiteReport& r, const JobConfig& cfg) {
  Json j = header("verify", cfg);
  j["seed"] = r.options.seed;
  j["samples"] = Json{{"branch", r.options.branch_samples},
                      {"fidelity", r.options.fidelity_samples},
                      {"negative", r.options.negative_samples}};
  j["theorem"] = r.options.theorem ? Json(*r.options.theorem) : Json(nullptr);
  j["passed"] = r.passed;
  Json fidelity = Json::array();
  for (const auto& f : r.fidelity) fidelity.push_back(fidelity_json(f));
  j["fidelity"] = fidelity;
  Json branches = Json::array();
  Json errata = Json::array();
  for (const auto& b : r.branches) {
    branches.push_back(branch_json(b));
    if (b.erratum) errata.push_back(erratum_json(*b.erratum));
  }
  j["branches"] = branches;
  Json remarks = Json::array();
  for (const auto& m : r.remarks) remarks.push_back(remark_json(m));
  j["remarks"] = remarks;
  Json negatives = Json::array();
  for (const auto& n : r.negatives) negatives.push_back(negative_json(n));
  j["negatives"] = negatives;
  j["errata"] = errata;
  Json disc = Json::array();
  for (const auto& d : r.discrepancies) disc.push_back(discrepancy_json(d));
  j["convention_discrepancies"] = disc;
  return j;
}

Json scan_json(const std::vector<ScanRow>& rows, Family family, const JobConfig& cfg) {
  Json j = header("scan", cfg);
  j["family"] = to_string(family);
  Json out = Json::array();
  for (const auto& r : rows) {
    Json row;
    row["params"] = params_json(r.params);
    if (r.violation) {
      row["status"] = "invalid";
      row["violation"] = *r.violation;
    } else {
      row["status"] = "ok";
      row["kind"] = to_string(r.classification.solution.kind);
      row["solution"] = solution_json(r.classification.solution);
      row["branches"] = r.classification.branches;
      row["classification"] = to_string(r.classification.status);
    }
    out.push_back(row);
  }
  j["rows"] = out;
  return j;
}

std::string describe_params(const FamilyParams& p) {
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

std::string describe_solution(const Ein2Solution& s) {
  std::string out = to_string(s.kind);
  if (s.point) out += " (λ₁, λ₂) = " + two(s.point->l1, s.point->l2);
  if (s.base && s.direction) {
    out += " (λ₁, λ₂) = " + two(s.base->l1, s.base->l2) + " + t" + two(s.direction->l1, s.direction->l2);
  }
  if (s.best_fit) out += ", best fit " + two(s.best_fit->l1, s.best_fit->l2);
  out += ", residual " + s.residual.to_string();
  return out;
}

void derive_text(std::ostream& os, const Derivation& d, const JobConfig& cfg) {
  os << "input: " << (d.params ? describe_params(*d.params) : "raw " + d.raw_path.value_or("")) << "\n";
  os << "mode: " << mode_name(cfg) << ", convention: " << to_string(cfg.convention) << "\n";
  os << "unimodular: " << (d.unimodular ? "yes" : "no") << "\n";
  os << "brackets:\n";
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = i + 1; j < kDim; ++j) {
      os << "  [" << kFrameNames[i] << ", " << kFrameNames[j] << "] = (";
      for (std::size_t k = 0; k < kDim; ++k) os << (k ? ", " : "") << d.sc(i, j, k).to_string();
      os << ")\n";
    }
  os << "connection (∇_{e_i} e_j):\n";
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = 0; j < kDim; ++j) {
      os << "  ∇_" << kFrameNames[i] << " " << kFrameNames[j] << " = (";
      for (std::size_t k = 0; k < kDim; ++k) os << (k ? ", " : "") << d.conn(i, j, k).to_string();
      os << ")\n";
    }
  matrix_text(os, "ricci", d.ricci.rho);
  matrix_text(os, "ricci operator", d.ricci.rho_op);
  matrix_text(os, "ricci squared", d.ricci.rho_sq);
  os << "Ein(2) rows (a + λ₁ b + λ₂ c = 0):\n";
  for (const auto& r : d.system.rows) {
    os << "  (" << r.i + 1 << "," << r.j + 1 << "): a = " << r.a.to_string() << ", b = " << r.b.to_string()
       << ", c = " << r.c.to_string() << "\n";
  }
  os << "solution: " << describe_solution(d.solution) << "\n";
}

void check_text(std::ostream& os, const Derivation& d, const JobConfig&) {
  os << "input: " << (d.params ? describe_params(*d.params) : "raw " + d.raw_path.value_or("")) << "\n";
  os << "Ein(2): " << (d.solution.is_ein2() ? "yes" : "no") << "\n";
  os << "solution: " << describe_solution(d.solution) << "\n";
}

void classify_text(std::ostream& os, const FamilyParams& p, const Classification& c, const JobConfig&) {
  os << "input: " << describe_params(p) << "\n";
  os << "status: " << to_string(c.status) << "\n";
  os << "branches: " << (c.branches.empty() ? "none" : join(c.branches, ", ")) << "\n";
  os << "solution: " << describe_solution(c.solution) << "\n";
}

void verify_text(std::ostream& os, const SuiteReport& r) {
  os << "seed " << r.options.seed << ", " << r.options.branch_samples << " samples per branch\n";
  os << "fidelity:\n";
  for (const auto& f : r.fidelity) {
    os << "  " << to_string(f.family) << ": " << (f.passed() ? "ok" : "FAIL") << " (" << f.samples << " samples";
    if (!f.passed()) {
      os << ", connection " << f.connection_mismatches << ", ricci " << f.ricci_mismatches << ", system "
         << f.system_mismatches << ", invariants " << f.invariant_failures;
    }
    os << ")\n";
    for (const auto& n : f.notes) os << "    " << n << "\n";
  }
  os << "branches:\n";
  for (const auto& b : r.branches) {
    os << "  " << b.id << " [" << to_string(b.family) << "] " << to_string(b.verdict) << " " << b.passed << "/"
       << b.attempted;
    if (!b.first_quadratic.empty()) os << ", " << b.first_quadratic;
    if (!b.note.empty()) os << ", " << b.note;
    os << "\n";
  }
  os << "remarks:\n";
  for (const auto& m : r.remarks) {
    os << "  " << m.name << " (" << m.branch << "): " << (m.passed ? "ok" : "FAIL") << "\n";
    os << "    " << m.defining_equation << "\n";
    os << "    " << m.expected_text << "\n";
    os << "    expected λ₁ = " << long_double_text(m.expected_l1) << ", λ₂ = " << long_double_text(m.expected_l2)
       << "\n";
    if (m.solver) os << "    solver   λ₁ = " << m.solver->l1.to_string() << ", λ₂ = " << m.solver->l2.to_string() << "\n";
  }
  os << "negatives:\n";
  for (const auto& n : r.negatives) {
    os << "  " << to_string(n.family) << ": " << (n.passed() ? "ok" : "FAIL") << " (" << n.samples << " samples, "
       << n.false_positives << " Ein(2))\n";
    if (n.counterexample) os << "    counterexample " << describe_params(*n.counterexample) << "\n";
  }
  bool any = false;
  for (const auto& b : r.branches) {
    if (!b.erratum) continue;
    if (!any) os << "errata:\n";
    any = true;
    const Erratum& e = *b.erratum;
    os << "  " << e.branch << "\n";
    os << "    printed:    " << e.printed << "\n";
    os << "    recomputed: " << e.recomputed << "\n";
    os << "    counterexample: " << describe_params(e.counterexample) << "\n";
    os << "    printed value " << two(e.printed_value.l1, e.printed_value.l2) << ", recomputed value "
       << two(e.recomputed_value.l1, e.recomputed_value.l2) << "\n";
    os << "    solver: " << describe_solution(e.solution) << "\n";
  }
  if (!r.discrepancies.empty()) os << "convention discrepancies (metric vs delta):\n";
  for (const auto& d : r.discrepancies) {
    os << "  " << d.branch << ": " << d.mismatched << "/" << d.samples << ", e.g. " << describe_params(d.example)
       << "\n";
    os << "    delta:  " << describe_solution(d.delta_solution) << "\n";
    os << "    metric: " << describe_solution(d.metric_solution) << "\n";
  }
  os << "result: " << (r.passed ? "passed" : "FAILED") << "\n";
}

void scan_csv(std::ostream& os, const std::vector<ScanRow>& rows, Family family) {
  const auto names = family_parameter_names(family);
  for (const auto& n : names) os << n << ",";
  os << "kind,lambda1,lambda2,direction1,direction2,residual,status,branches\n";
  for (const auto& r : rows) {
    for (const auto& n : names) {
      if (n == "alpha") os << r.params.alpha.to_string();
      if (n == "beta") os << r.params.beta.to_string();
      if (n == "gamma") os << r.params.gamma.to_string();
      if (n == "delta") os << r.params.delta.to_string();
      if (n == "eta") os << r.params.eta;
      os << ",";
    }
    if (r.violation) {
      os << ",,,,,," << csv_field("invalid: " + *r.violation + " violated") << ",\n";
      continue;
    }
    const Ein2Solution& s = r.classification.solution;
    std::string l1, l2, d1, d2;
    if (s.point) {
      l1 = s.point->l1.to_string();
      l2 = s.point->l2.to_string();
    } else if (s.base) {
      l1 = s.base->l1.to_string();
      l2 = s.base->l2.to_string();
      d1 = s.direction->l1.to_string();
      d2 = s.direction->l2.to_string();
    }
    os << to_string(s.kind) << "," << l1 << "," << l2 << "," << d1 << "," << d2 << "," << s.residual.to_string()
       << "," << to_string(r.classification.status) << "," << csv_field(join(r.classification.branches, ";"))
       << "\n";
  }
}

}  // namespace ein2::cli
