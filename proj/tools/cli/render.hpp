#pragma once

#include <json.hpp>

#include <optional>
#include <ostream>
#include <vector>

#include "cli/input.hpp"
#include "ein2/suite.hpp"

namespace ein2::cli {

using Json = nlohmann::ordered_json;

/// Report format version written to every JSON document.
inline constexpr int kSchemaVersion = 1;

/// Everything derive reports about one algebra.
struct Derivation {
  std::optional<FamilyParams> params;
  std::optional<std::string> raw_path;
  StructureConstants sc;
  bool unimodular = false;
  ConnectionCoefficients conn;
  RicciData ricci;
  Ein2System system;
  Ein2Solution solution;
};

Derivation derive(const StructureConstants& sc, std::optional<FamilyParams> params, const JobConfig& cfg);

struct ScanRow {
  FamilyParams params;
  std::optional<std::string> violation;
  Classification classification;
};

/// Exact values as "p/q" strings, approximate values as JSON numbers.
Json scalar_json(const Scalar& x);
Json params_json(const FamilyParams& p);
Json solution_json(const Ein2Solution& s);

Json derive_json(const Derivation& d, const JobConfig& cfg);
Json check_json(const Derivation& d, const JobConfig& cfg);
Json classify_json(const FamilyParams& p, const Classification& c, const JobConfig& cfg);
Json verify_json(const SuiteReport& r, const JobConfig& cfg);
Json scan_json(const std::vector<ScanRow>& rows, Family family, const JobConfig& cfg);

void derive_text(std::ostream& os, const Derivation& d, const JobConfig& cfg);
void check_text(std::ostream& os, const Derivation& d, const JobConfig& cfg);
void classify_text(std::ostream& os, const FamilyParams& p, const Classification& c, const JobConfig& cfg);
void verify_text(std::ostream& os, const SuiteReport& r);
void scan_csv(std::ostream& os, const std::vector<ScanRow>& rows, Family family);

/// "G1 alpha=1 beta=2".
std::string describe_params(const FamilyParams& p);
std::string describe_solution(const Ein2Solution& s);

}  // namespace ein2::cli
