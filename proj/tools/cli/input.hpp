#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ein2/liealg.hpp"
#include "ein2/sampling.hpp"
#include "ein2/system.hpp"

namespace ein2::cli {

/// Anything that should end the run with exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { text, json, csv };

Format parse_format(const std::string& text);
std::string to_string(Format f);

/// Everything a subcommand needs, merged from the config file and flags.
struct JobConfig {
  std::string command;
  std::optional<std::string> family;
  /// Parameter text keyed by "alpha", "beta", "gamma", "delta", "eta".
  std::map<std::string, std::string> params;
  std::optional<std::string> raw;
  Convention convention = Convention::delta;
  bool approx = false;
  double tol = kDefaultTolerance;
  std::uint64_t seed = kDefaultSeed;
  std::optional<std::size_t> samples;
  std::optional<std::string> out;
  std::optional<Format> format;
  std::optional<std::string> theorem;
};

inline const std::vector<std::string> kParamNames{"alpha", "beta", "gamma", "delta", "eta"};

/**
 * Reads "key = value" lines ('#' starts a comment) into cfg. Errors name the
 * file, line and key.
 */
void load_config_file(const std::string& path, JobConfig& cfg);

/// Applies one key to cfg; `where` prefixes error messages.
void apply_config_key(JobConfig& cfg, const std::string& key, const std::string& value, const std::string& where);

Scalar parse_number(const std::string& text, const std::string& field);
double parse_tolerance(const std::string& text, const std::string& field);
std::uint64_t parse_unsigned(const std::string& text, const std::string& field);

/// Family point from cfg.family and cfg.params (approx when cfg.approx).
FamilyParams make_params(const JobConfig& cfg);

/**
 * Structure constants from a file: either "cK_IJ = value" lines (1-based,
 * c^K_IJ; antisymmetric partners are filled in) or a derive JSON report.
 */
StructureConstants load_raw(const std::string& path, const JobConfig& cfg);

/// "start:stop:step" (inclusive, step > 0), a comma list, or a single value.
std::vector<Scalar> parse_grid(const std::string& text, const std::string& field, const JobConfig& cfg);

/// Upper bound on the number of scan points.
inline constexpr std::size_t kMaxGridPoints = 1000000;

}  // namespace ein2::cli
