#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ein2/errors.hpp"
#include "ein2/tensor.hpp"

namespace ein2 {

enum class Family { G1, G2, G3, G4, G5, G6, G7 };

inline constexpr std::array<Family, 7> kAllFamilies{Family::G1, Family::G2, Family::G3, Family::G4,
                                                    Family::G5, Family::G6, Family::G7};

std::string to_string(Family f);
/// Accepts "G1".."G7" (case-insensitive); throws UnknownFamily.
Family parse_family(std::string_view name);
bool is_unimodular_family(Family f);

/// Parameters of one classified family. Unused parameters are ignored.
struct FamilyParams {
  Family family = Family::G1;
  Scalar alpha;
  Scalar beta;
  Scalar gamma;
  Scalar delta;
  int eta = 1;  // G4 only

  /// True when every parameter is exact.
  bool is_exact() const;
};

/// Names of the parameters a family actually uses, in order ("alpha", ..., "eta").
std::vector<std::string> family_parameter_names(Family f);

/// Returns the violated constraint text, or nullopt when the point is valid.
std::optional<std::string> violated_constraint(const FamilyParams& p);
/// Throws ConstraintViolation naming the first violated (in)equality.
void validate_params(const FamilyParams& p);

/**
 * @brief Structure constants c^k_ij of a 3-dimensional algebra in the fixed
 * pseudo-orthonormal frame: [e_i, e_j] = sum_k c^k_ij e_k.
 *
 * Always antisymmetric in (i, j). The Jacobi identity is not enforced here so
 * that jacobi_residual can observe it.
 */
class StructureConstants {
 public:
  /// Abelian algebra.
  StructureConstants() = default;

  /// c(i, j, k) = c^k_ij. Throws AntisymmetryViolation.
  static StructureConstants from_raw(const Tensor<3>& c);

  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const { return c_(i, j, k); }
  const Tensor<3>& raw() const { return c_; }
  /// Coefficients of [e_i, e_j].
  Vec3 bracket(std::size_t i, std::size_t j) const;
  bool is_exact() const { return c_.is_exact(); }

 private:
  explicit StructureConstants(const Tensor<3>& c) : c_(c) {}
  Tensor<3> c_;
};

StructureConstants build_family(const FamilyParams& p);

/// J(i, j, k, l): e_l-coefficient of [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j].
Tensor<4> jacobi_residual(const StructureConstants& sc);
bool satisfies_jacobi(const StructureConstants& sc);

/// trace(ad_{e_i}) = 0 for every basis vector.
bool unimodular(const StructureConstants& sc);

}  // namespace ein2
