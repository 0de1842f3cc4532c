#include "ein2/liealg.hpp"

#include <cctype>

namespace ein2 {

std::string to_string(Family f) { return "G" + std::to_string(static_cast<int>(f) + 1); }

Family parse_family(std::string_view name) {
  if (name.size() == 2 && (name[0] == 'G' || name[0] == 'g') && name[1] >= '1' && name[1] <= '7') {
    return static_cast<Family>(name[1] - '1');
  }
  throw UnknownFamily(std::string(name));
}

bool is_unimodular_family(Family f) { return static_cast<int>(f) <= static_cast<int>(Family::G4); }

bool FamilyParams::is_exact() const {
  return alpha.is_exact() && beta.is_exact() && gamma.is_exact() && delta.is_exact();
}

std::vector<std::string> family_parameter_names(Family f) {
  switch (f) {
    case Family::G1:
      return {"alpha", "beta"};
    case Family::G2:
    case Family::G3:
      return {"alpha", "beta", "gamma"};
    case Family::G4:
      return {"alpha", "beta", "eta"};
    default:
      return {"alpha", "beta", "gamma", "delta"};
  }
}

std::optional<std::string> violated_constraint(const FamilyParams& p) {
  const Scalar& a = p.alpha;
  const Scalar& b = p.beta;
  const Scalar& g = p.gamma;
  const Scalar& d = p.delta;
  switch (p.family) {
    case Family::G1:
      if (a.is_zero()) return "α ≠ 0";
      break;
    case Family::G2:
      if (g.is_zero()) return "γ ≠ 0";
      break;
    case Family::G3:
      break;
    case Family::G4:
      if (p.eta != 1 && p.eta != -1) return "η = 1 or −1";
      break;
    case Family::G5:
      if ((a + d).is_zero()) return "α + δ ≠ 0";
      if (!(a * g + b * d).is_zero()) return "αγ + βδ = 0";
      break;
    case Family::G6:
      if ((a + d).is_zero()) return "α + δ ≠ 0";
      if (!(a * g - b * d).is_zero()) return "αγ − βδ = 0";
      break;
    case Family::G7:
      if ((a + d).is_zero()) return "α + δ ≠ 0";
      if (!(a * g).is_zero()) return "αγ = 0";
      break;
  }
  return std::nullopt;
}

void validate_params(const FamilyParams& p) {
  if (auto violated = violated_constraint(p)) throw ConstraintViolation(*violated);
}

StructureConstants StructureConstants::from_raw(const Tensor<3>& c) {
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = i; j < kDim; ++j) {
      for (std::size_t k = 0; k < kDim; ++k) {
        if (!(c(i, j, k) + c(j, i, k)).is_zero()) throw AntisymmetryViolation(i, j, k);
      }
    }
  }
  return StructureConstants(c);
}

Vec3 StructureConstants::bracket(std::size_t i, std::size_t j) const {
  Vec3 v;
  for (std::size_t k = 0; k < kDim; ++k) v(k) = c_(i, j, k);
  return v;
}

StructureConstants build_family(const FamilyParams& p) {
  validate_params(p);
  const Scalar& a = p.alpha;
  const Scalar& b = p.beta;
  const Scalar& g = p.gamma;
  const Scalar& d = p.delta;
  const Scalar eta(p.eta);

  Tensor<3> c;
  auto set = [&c](std::size_t i, std::size_t j, const Scalar& x1, const Scalar& x2, const Scalar& x3) {
    const Scalar* xs[] = {&x1, &x2, &x3};
    for (std::size_t k = 0; k < kDim; ++k) {
      c(i, j, k) = *xs[k];
      c(j, i, k) = -*xs[k];
    }
  };
  const Scalar zero;
  const Scalar one(1);
  switch (p.family) {
    case Family::G1:
      set(0, 1, a, zero, -b);
      set(0, 2, -a, -b, zero);
      set(1, 2, b, a, a);
      break;
    case Family::G2:
      set(0, 1, zero, g, -b);
      set(0, 2, zero, -b, -g);
      set(1, 2, a, zero, zero);
      break;
    case Family::G3:
      set(0, 1, zero, zero, -g);
      set(0, 2, zero, -b, zero);
      set(1, 2, a, zero, zero);
      break;
    case Family::G4:
      set(0, 1, zero, -one, Scalar(2) * eta - b);
      set(0, 2, zero, -b, one);
      set(1, 2, a, zero, zero);
      break;
    case Family::G5:
      set(0, 1, zero, zero, zero);
      set(0, 2, a, b, zero);
      set(1, 2, g, d, zero);
      break;
    case Family::G6:
      set(0, 1, zero, a, b);
      set(0, 2, zero, g, d);
      set(1, 2, zero, zero, zero);
      break;
    case Family::G7:
      set(0, 1, -a, -b, -b);
      set(0, 2, a, b, b);
      set(1, 2, g, d, d);
      break;
  }
  return StructureConstants::from_raw(c);
}

Tensor<4> jacobi_residual(const StructureConstants& sc) {
  // [[e_i,e_j],e_k] = sum_m c^m_ij c^l_mk
  auto double_bracket = [&sc](std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    Scalar s;
    for (std::size_t m = 0; m < kDim; ++m) s += sc(i, j, m) * sc(m, k, l);
    return s;
  };
  Tensor<4> r;
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = 0; j < kDim; ++j)
      for (std::size_t k = 0; k < kDim; ++k)
        for (std::size_t l = 0; l < kDim; ++l)
          r(i, j, k, l) = double_bracket(i, j, k, l) + double_bracket(j, k, i, l) + double_bracket(k, i, j, l);
  return r;
}

bool satisfies_jacobi(const StructureConstants& sc) { return jacobi_residual(sc).is_zero(); }

bool unimodular(const StructureConstants& sc) {
  for (std::size_t i = 0; i < kDim; ++i) {
    Scalar trace;
    for (std::size_t k = 0; k < kDim; ++k) trace += sc(i, k, k);
    if (!trace.is_zero()) return false;
  }
  return true;
}

}  // namespace ein2
