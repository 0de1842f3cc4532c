#include "cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "cli/render.hpp"
#include "ein2/errors.hpp"

namespace ein2::cli {

namespace {

const std::vector<std::string> kFlagKeys{"family", "alpha",   "beta",   "gamma",  "delta", "eta", "raw",
                                         "convention", "mode", "tol", "seed", "samples", "out", "format"};

struct Flags {
  std::map<std::string, std::string> values;
  std::string config;
  std::string theorem;
};

void add_common(CLI::App* sub, Flags& flags) {
  sub->add_option("--config", flags.config, "key = value file; flags override it");
  sub->add_option("--family", flags.values["family"], "G1 ... G7");
  sub->add_option("--alpha", flags.values["alpha"], "rational, decimal or p/q");
  sub->add_option("--beta", flags.values["beta"]);
  sub->add_option("--gamma", flags.values["gamma"]);
  sub->add_option("--delta", flags.values["delta"]);
  sub->add_option("--eta", flags.values["eta"], "1 or -1 (G4)");
  sub->add_option("--raw", flags.values["raw"], "structure constants file");
  sub->add_option("--convention", flags.values["convention"], "delta or metric");
  sub->add_option("--mode", flags.values["mode"], "exact or approx");
  sub->add_option("--tol", flags.values["tol"], "tolerance in approx mode");
  sub->add_option("--seed", flags.values["seed"], "sampling seed");
  sub->add_option("--samples", flags.values["samples"], "samples per branch");
  sub->add_option("--out", flags.values["out"], "write the report to this file");
  sub->add_option("--format", flags.values["format"], "text, json or csv");
}

JobConfig build_config(const std::string& command, CLI::App* sub, const Flags& flags) {
  JobConfig cfg;
  cfg.command = command;
  if (sub->count("--config") > 0) load_config_file(flags.config, cfg);
  for (const auto& key : kFlagKeys) {
    if (sub->count("--" + key) == 0) continue;
    apply_config_key(cfg, key, flags.values.at(key), "--" + key + ": ");
  }
  if (sub->get_option_no_throw("--theorem") != nullptr && sub->count("--theorem") > 0) cfg.theorem = flags.theorem;
  return cfg;
}

void emit(const JobConfig& cfg, std::ostream& out, const std::string& text) {
  if (!cfg.out) {
    out << text;
    return;
  }
  std::ofstream file(*cfg.out, std::ios::binary);
  if (!file) throw InputError("--out: cannot write '" + *cfg.out + "'");
  file << text;
}

Format format_of(const JobConfig& cfg, Format fallback, bool csv_allowed) {
  Format f = cfg.format.value_or(fallback);
  if (f == Format::csv && !csv_allowed) throw InputError("--format: csv is only available for scan");
  return f;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Derivation load_input(const JobConfig& cfg) {
  if (cfg.raw) {
    if (cfg.family || !cfg.params.empty()) throw InputError("--raw cannot be combined with family parameters");
    return derive(load_raw(*cfg.raw, cfg), std::nullopt, cfg);
  }
  FamilyParams p = make_params(cfg);
  validate_params(p);
  return derive(build_family(p), p, cfg);
}

int cmd_derive(const JobConfig& cfg, std::ostream& out) {
  Derivation d = load_input(cfg);
  std::ostringstream os;
  if (format_of(cfg, Format::text, false) == Format::json) {
    os << dump(derive_json(d, cfg));
  } else {
    derive_text(os, d, cfg);
  }
  emit(cfg, out, os.str());
  return kExitOk;
}

int cmd_check(const JobConfig& cfg, std::ostream& out) {
  Derivation d = load_input(cfg);
  std::ostringstream os;
  if (format_of(cfg, Format::text, false) == Format::json) {
    os << dump(check_json(d, cfg));
  } else {
    check_text(os, d, cfg);
  }
  emit(cfg, out, os.str());
  return d.solution.is_ein2() ? kExitOk : kExitNegative;
}

int cmd_classify(const JobConfig& cfg, std::ostream& out) {
  if (cfg.raw) throw InputError("classify needs --family; raw algebras have no branch catalog");
  FamilyParams p = make_params(cfg);
  Classification c = classify(p, cfg.convention);
  std::ostringstream os;
  if (format_of(cfg, Format::text, false) == Format::json) {
    os << dump(classify_json(p, c, cfg));
  } else {
    classify_text(os, p, c, cfg);
  }
  emit(cfg, out, os.str());
  return c.status == Classification::Status::matched ? kExitOk : kExitNegative;
}

int cmd_verify(const JobConfig& cfg, std::ostream& out) {
  SuiteOptions options;
  options.seed = cfg.seed;
  if (cfg.samples) options.branch_samples = *cfg.samples;
  options.convention = cfg.convention;
  options.tolerance = cfg.tol;
  if (cfg.theorem) {
    const auto& ids = theorem_ids();
    if (std::find(ids.begin(), ids.end(), *cfg.theorem) == ids.end()) {
      throw InputError("--theorem: unknown theorem '" + *cfg.theorem + "'");
    }
    options.theorem = cfg.theorem;
  }
  SuiteReport r = run_suite(options);
  std::ostringstream os;
  if (format_of(cfg, Format::text, false) == Format::json) {
    os << dump(verify_json(r, cfg));
  } else {
    verify_text(os, r);
  }
  emit(cfg, out, os.str());
  return r.passed ? kExitOk : kExitNegative;
}

int cmd_scan(const JobConfig& cfg, std::ostream& out) {
  if (cfg.raw) throw InputError("scan needs --family");
  if (!cfg.family) throw InputError("--family is required");
  Family family = Family::G1;
  try {
    family = parse_family(*cfg.family);
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
  const auto names = family_parameter_names(family);
  for (const auto& [name, text] : cfg.params) {
    if (std::find(names.begin(), names.end(), name) == names.end()) {
      throw InputError("parameter '" + name + "' is not used by " + to_string(family));
    }
  }

  std::vector<std::vector<Scalar>> axes;
  std::vector<int> etas{1};
  std::size_t total = 1;
  for (const auto& name : names) {
    auto it = cfg.params.find(name);
    if (name == "eta") {
      if (it != cfg.params.end()) {
        etas.clear();
        for (const auto& v : parse_grid(it->second, "--eta", JobConfig{})) {
          if (!v.is_exact() || !(v == Scalar(1) || v == Scalar(-1))) throw InputError("--eta: η = 1 or −1 violated");
          etas.push_back(v.sign());
        }
      }
      total *= etas.size();
      continue;
    }
    axes.push_back(it == cfg.params.end() ? std::vector<Scalar>{cfg.approx ? Scalar().to_approx(cfg.tol) : Scalar()}
                                          : parse_grid(it->second, "--" + name, cfg));
    total *= axes.back().size();
    if (total > kMaxGridPoints) throw InputError("grid too large");
  }

  std::vector<ScanRow> rows;
  rows.reserve(total);
  std::vector<std::size_t> idx(axes.size() + 1, 0);
  const std::size_t eta_slot = axes.size();
  for (std::size_t n = 0; n < total; ++n) {
    FamilyParams p;
    p.family = family;
    std::size_t a = 0;
    for (const auto& name : names) {
      if (name == "eta") {
        p.eta = etas[idx[eta_slot]];
        continue;
      }
      const Scalar& v = axes[a][idx[a]];
      if (name == "alpha") p.alpha = v;
      if (name == "beta") p.beta = v;
      if (name == "gamma") p.gamma = v;
      if (name == "delta") p.delta = v;
      ++a;
    }
    ScanRow row;
    row.params = p;
    row.violation = violated_constraint(p);
    if (!row.violation) row.classification = classify(p, cfg.convention);
    rows.push_back(std::move(row));

    // odometer over the axes in parameter order, last axis fastest
    for (std::size_t k = idx.size(); k-- > 0;) {
      const std::size_t size = k == eta_slot ? etas.size() : axes[k].size();
      if (++idx[k] < size) break;
      idx[k] = 0;
    }
  }

  std::ostringstream os;
  switch (format_of(cfg, Format::csv, true)) {
    case Format::csv:
      scan_csv(os, rows, family);
      break;
    case Format::json:
      os << dump(scan_json(rows, family, cfg));
      break;
    case Format::text:
      for (const auto& r : rows) {
        os << describe_params(r.params) << ": ";
        if (r.violation) {
          os << "invalid (" << *r.violation << " violated)\n";
        } else {
          os << describe_solution(r.classification.solution) << ", branches "
             << (r.classification.branches.empty() ? std::string("none") : [&] {
                  std::string s;
                  for (const auto& b : r.classification.branches) s += (s.empty() ? "" : ";") + b;
                  return s;
                }()) << "\n";
        }
      }
      break;
  }
  emit(cfg, out, os.str());
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ein(2) verification for three-dimensional Lorentzian Lie groups", "ein2"};
  app.require_subcommand(1);
  Flags flags;
  CLI::App* derive_cmd = app.add_subcommand("derive", "connection, Ricci data and Ein(2) rows");
  CLI::App* check_cmd = app.add_subcommand("check", "is the metric Ein(2)");
  CLI::App* classify_cmd = app.add_subcommand("classify", "match a family point against the branch catalog");
  CLI::App* verify_cmd = app.add_subcommand("verify", "run the verification suite");
  CLI::App* scan_cmd = app.add_subcommand("scan", "sweep a parameter grid");
  for (CLI::App* sub : {derive_cmd, check_cmd, classify_cmd, verify_cmd, scan_cmd}) add_common(sub, flags);
  verify_cmd->add_option("--theorem", flags.theorem, "restrict to one theorem, e.g. 2.5");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, r;
    int code = app.exit(e, o, r);
    out << o.str();
    err << r.str();
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    for (CLI::App* sub : app.get_subcommands()) {
      const std::string name = sub->get_name();
      JobConfig cfg = build_config(name, sub, flags);
      if (name == "derive") return cmd_derive(cfg, out);
      if (name == "check") return cmd_check(cfg, out);
      if (name == "classify") return cmd_classify(cfg, out);
      if (name == "verify") return cmd_verify(cfg, out);
      if (name == "scan") return cmd_scan(cfg, out);
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace ein2::cli
