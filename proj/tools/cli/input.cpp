#include "cli/input.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace ein2::cli {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string labelled(const std::string& field, const std::string& message) {
  return field.empty() ? message : field + ": " + message;
}

Scalar with_mode(Scalar x, const JobConfig& cfg) { return cfg.approx && !x.is_zero() ? x.to_approx(cfg.tol) : x; }

}  // namespace

Format parse_format(const std::string& text) {
  if (text == "text") return Format::text;
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  throw InputError("unknown format '" + text + "' (expected text, json or csv)");
}

std::string to_string(Format f) {
  switch (f) {
    case Format::text:
      return "text";
    case Format::json:
      return "json";
    case Format::csv:
      return "csv";
  }
  return "text";
}

Scalar parse_number(const std::string& text, const std::string& field) {
  try {
    return Scalar::parse(trim(text));
  } catch (const std::exception& e) {
    throw InputError(labelled(field, e.what()));
  }
}

double parse_tolerance(const std::string& text, const std::string& field) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(trim(text), &used);
  } catch (const std::exception&) {
    throw InputError(field + ": not a number: '" + text + "'");
  }
  if (used != trim(text).size()) throw InputError(field + ": not a number: '" + text + "'");
  if (!(v > 0.0)) throw InputError(field + ": tolerance must be positive");
  return v;
}

std::uint64_t parse_unsigned(const std::string& text, const std::string& field) {
  std::string t = trim(text);
  if (t.empty() || t[0] == '-' || t[0] == '+') throw InputError(field + ": not an unsigned integer: '" + text + "'");
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(t, &used);
  } catch (const std::exception&) {
    throw InputError(field + ": not an unsigned integer: '" + text + "'");
  }
  if (used != t.size()) throw InputError(field + ": not an unsigned integer: '" + text + "'");
  return v;
}

void apply_config_key(JobConfig& cfg, const std::string& key, const std::string& value, const std::string& where) {
  const std::string field = where + "field '" + key + "'";
  try {
    if (key == "family") {
      parse_family(value);
      cfg.family = value;
    } else if (key == "alpha" || key == "beta" || key == "gamma" || key == "delta" || key == "eta") {
      if (cfg.command == "scan") {
        parse_grid(value, "", cfg);
      } else {
        parse_number(value, "");
      }
      cfg.params[key] = value;
    } else if (key == "raw") {
      cfg.raw = value;
    } else if (key == "convention") {
      cfg.convention = parse_convention(value);
    } else if (key == "mode") {
      if (value != "exact" && value != "approx") throw InputError("unknown mode '" + value + "' (expected exact or approx)");
      cfg.approx = value == "approx";
    } else if (key == "tol") {
      cfg.tol = parse_tolerance(value, "value");
    } else if (key == "seed") {
      cfg.seed = parse_unsigned(value, "value");
    } else if (key == "samples") {
      cfg.samples = parse_unsigned(value, "value");
      if (*cfg.samples == 0) throw InputError("samples must be at least 1");
    } else if (key == "format") {
      cfg.format = parse_format(value);
    } else if (key == "out") {
      cfg.out = value;
    } else if (key == "theorem") {
      cfg.theorem = value;
    } else {
      throw InputError("unknown key");
    }
  } catch (const std::exception& e) {
    throw InputError(field + ": " + e.what());
  }
}

void load_config_file(const std::string& path, JobConfig& cfg) {
  std::istringstream in(read_file(path));
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::string where = path + ":" + std::to_string(number) + ": ";
    auto eq = line.find('=');
    if (eq == std::string::npos) throw InputError(where + "expected 'key = value'");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw InputError(where + "missing key");
    apply_config_key(cfg, key, value, where);
  }
}

FamilyParams make_params(const JobConfig& cfg) {
  if (!cfg.family) throw InputError("--family or --raw is required");
  FamilyParams p;
  try {
    p.family = parse_family(*cfg.family);
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
  const auto used = family_parameter_names(p.family);
  for (const auto& [name, text] : cfg.params) {
    if (std::find(used.begin(), used.end(), name) == used.end()) {
      throw InputError("parameter '" + name + "' is not used by " + to_string(p.family));
    }
    if (name == "eta") {
      Scalar e = parse_number(text, "eta");
      if (!e.is_exact() || e.rational().get_den() != 1 || !(e == Scalar(1) || e == Scalar(-1))) {
        throw InputError("η = 1 or −1 violated");
      }
      p.eta = e.sign();
      continue;
    }
    Scalar v = with_mode(parse_number(text, name), cfg);
    if (name == "alpha") p.alpha = v;
    if (name == "beta") p.beta = v;
    if (name == "gamma") p.gamma = v;
    if (name == "delta") p.delta = v;
  }
  p.alpha = with_mode(p.alpha, cfg);
  p.beta = with_mode(p.beta, cfg);
  p.gamma = with_mode(p.gamma, cfg);
  p.delta = with_mode(p.delta, cfg);
  return p;
}

namespace {

StructureConstants raw_from_json(const std::string& path, const std::string& text, const JobConfig& cfg) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path + ": invalid JSON: " + e.what());
  }
  if (!doc.is_object() || !doc.contains("structure_constants")) {
    throw InputError(path + ": field 'structure_constants' missing");
  }
  double tol = cfg.tol;
  if (doc.contains("tolerance") && doc["tolerance"].is_number() && doc["tolerance"].get<double>() > 0) {
    tol = doc["tolerance"].get<double>();
  }
  const auto& c = doc["structure_constants"];
  Tensor<3> t;
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = 0; j < kDim; ++j)
      for (std::size_t k = 0; k < kDim; ++k) {
        const std::string field =
            "structure_constants[" + std::to_string(i) + "][" + std::to_string(j) + "][" + std::to_string(k) + "]";
        const nlohmann::json* v = nullptr;
        if (c.is_array() && c.size() == kDim && c[i].is_array() && c[i].size() == kDim && c[i][j].is_array() &&
            c[i][j].size() == kDim) {
          v = &c[i][j][k];
        }
        if (v == nullptr) throw InputError(path + ": field '" + field + "': expected a 3x3x3 array");
        if (v->is_string()) {
          t(i, j, k) = with_mode(parse_number(v->get<std::string>(), path + ": field '" + field + "'"), cfg);
        } else if (v->is_number()) {
          t(i, j, k) = Scalar::approx(v->get<double>(), tol);
        } else {
          throw InputError(path + ": field '" + field + "': expected a number or a \"p/q\" string");
        }
      }
  try {
    return StructureConstants::from_raw(t);
  } catch (const std::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

StructureConstants raw_from_lines(const std::string& path, const std::string& text, const JobConfig& cfg) {
  Tensor<3> t;
  std::array<bool, 27> seen{};
  std::istringstream in(text);
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::string where = path + ":" + std::to_string(number) + ": ";
    auto eq = line.find('=');
    if (eq == std::string::npos) throw InputError(where + "expected 'cK_IJ = value'");
    std::string key = trim(line.substr(0, eq));
    const bool shape = key.size() == 5 && key[0] == 'c' && key[2] == '_' && key[1] >= '1' && key[1] <= '3' &&
                       key[3] >= '1' && key[3] <= '3' && key[4] >= '1' && key[4] <= '3';
    if (!shape) throw InputError(where + "field '" + key + "': expected a key cK_IJ with K, I, J in 1..3");
    std::size_t k = key[1] - '1';
    std::size_t i = key[3] - '1';
    std::size_t j = key[4] - '1';
    Scalar v = with_mode(parse_number(line.substr(eq + 1), where + "field '" + key + "'"), cfg);
    const std::size_t slot = (i * kDim + j) * kDim + k;
    if (seen[slot]) throw InputError(where + "field '" + key + "': given twice");
    seen[slot] = true;
    t(i, j, k) = v;
  }
  // fill antisymmetric partners that were not given explicitly
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = 0; j < kDim; ++j)
      for (std::size_t k = 0; k < kDim; ++k) {
        const std::size_t slot = (i * kDim + j) * kDim + k;
        const std::size_t mirror = (j * kDim + i) * kDim + k;
        if (!seen[slot] && seen[mirror]) t(i, j, k) = -t(j, i, k);
      }
  try {
    return StructureConstants::from_raw(t);
  } catch (const std::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace

StructureConstants load_raw(const std::string& path, const JobConfig& cfg) {
  std::string text = read_file(path);
  std::string head = trim(text);
  if (!head.empty() && head[0] == '{') return raw_from_json(path, text, cfg);
  return raw_from_lines(path, text, cfg);
}

std::vector<Scalar> parse_grid(const std::string& text, const std::string& field, const JobConfig& cfg) {
  std::string t = trim(text);
  std::vector<Scalar> out;
  if (t.empty()) throw InputError(labelled(field, "empty grid"));
  if (t.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(t);
    std::string part;
    while (std::getline(ss, part, ':')) parts.push_back(part);
    if (parts.size() != 3) throw InputError(labelled(field, "expected start:stop:step"));
    Scalar start = parse_number(parts[0], field);
    Scalar stop = parse_number(parts[1], field);
    Scalar step = parse_number(parts[2], field);
    if (step.sign() <= 0) throw InputError(labelled(field, "step must be positive"));
    for (Scalar x = start; !(x > stop); x += step) {
      if (out.size() >= kMaxGridPoints) throw InputError(labelled(field, "grid too large"));
      out.push_back(with_mode(x, cfg));
    }
  } else {
    std::stringstream ss(t);
    std::string part;
    while (std::getline(ss, part, ',')) out.push_back(with_mode(parse_number(part, field), cfg));
  }
  if (out.empty()) throw InputError(labelled(field, "empty grid"));
  return out;
}

}  // namespace ein2::cli
