#include "ein2/sampling.hpp"

namespace ein2 {

Scalar Sampler::grid() {
  long p = static_cast<long>(below(19)) - 9;
  long q = static_cast<long>(below(4)) + 1;
  return Scalar::ratio(p, q);
}

Scalar Sampler::grid_nonzero() {
  Scalar x = grid();
  while (x.is_zero()) x = grid();
  return x;
}

Scalar Sampler::param(const std::string& name, bool nonzero) {
  if (auto it = overrides_.find(name); it != overrides_.end()) return it->second;
  return nonzero ? grid_nonzero() : grid();
}

int Sampler::eta() {
  if (auto it = overrides_.find("eta"); it != overrides_.end()) return it->second.sign() < 0 ? -1 : 1;
  return sign();
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

Scalar maybe_zero(Sampler& s) { return s.one_in(5) ? Scalar() : s.grid(); }

}  // namespace

FamilyParams random_valid_params(Family family, Sampler& s) {
  for (;;) {
    FamilyParams p;
    p.family = family;
    switch (family) {
      case Family::G1:
        p.alpha = s.grid_nonzero();
        p.beta = maybe_zero(s);
        break;
      case Family::G2:
        p.alpha = maybe_zero(s);
        p.beta = maybe_zero(s);
        p.gamma = s.grid_nonzero();
        break;
      case Family::G3:
        p.alpha = maybe_zero(s);
        p.beta = maybe_zero(s);
        p.gamma = maybe_zero(s);
        break;
      case Family::G4:
        p.alpha = maybe_zero(s);
        p.beta = maybe_zero(s);
        p.eta = s.sign();
        break;
      case Family::G5:
      case Family::G6: {
        // G5: αγ + βδ = 0, G6: αγ − βδ = 0
        const Scalar sign = family == Family::G5 ? Scalar(-1) : Scalar(1);
        p.delta = maybe_zero(s);
        p.beta = maybe_zero(s);
        if (s.one_in(4)) {
          p.alpha = Scalar();
          p.gamma = maybe_zero(s);
          if (s.one_in(2)) {
            p.beta = Scalar();
          } else {
            p.delta = Scalar();
          }
        } else {
          p.alpha = s.grid_nonzero();
          p.gamma = sign * p.beta * p.delta / p.alpha;
        }
        break;
      }
      case Family::G7:
        p.beta = maybe_zero(s);
        p.delta = maybe_zero(s);
        if (s.one_in(2)) {
          p.alpha = Scalar();
          p.gamma = maybe_zero(s);
        } else {
          p.alpha = maybe_zero(s);
          p.gamma = Scalar();
        }
        break;
    }
    if (!violated_constraint(p)) return p;
  }
}

}  // namespace ein2
