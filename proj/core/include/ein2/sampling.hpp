#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>

#include "ein2/liealg.hpp"

namespace ein2 {

/// Seed used when none is given.
inline constexpr std::uint64_t kDefaultSeed = 7;

/// Parameter values pinned by the caller, keyed by "alpha", "beta", ...
using ParamOverrides = std::map<std::string, Scalar>;

/**
 * Deterministic draws from the rational grid {p/q : |p| <= 9, 1 <= q <= 4}.
 *
 * mt19937_64 output is fixed by the standard and values are reduced with a
 * plain modulus, so a seed reproduces the same sequence on every platform.
 */
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed, ParamOverrides overrides = {})
      : rng_(seed), overrides_(std::move(overrides)) {}

  std::uint64_t below(std::uint64_t n) { return rng_() % n; }
  bool one_in(std::uint64_t n) { return below(n) == 0; }
  int sign() { return below(2) == 0 ? 1 : -1; }

  Scalar grid();
  Scalar grid_nonzero();

  /// An override for `name` if one is pinned, otherwise a draw (nonzero if asked).
  Scalar param(const std::string& name, bool nonzero = false);
  int eta();

  bool pinned(const std::string& name) const { return overrides_.count(name) != 0; }

 private:
  std::mt19937_64 rng_;
  ParamOverrides overrides_;
};

/// Sub-seed for stream `index` of a run seeded with `seed` (splitmix64 mix).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/**
 * A random exact point that passes validate_params. Equality constraints are
 * met by solving for one parameter; zeros are drawn with raised probability so
 * degenerate strata are visited.
 */
FamilyParams random_valid_params(Family family, Sampler& sampler);

}  // namespace ein2
