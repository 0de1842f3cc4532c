#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "ein2/geometry.hpp"

namespace ein2 {

/**
 * How the constant term of the component equations is written.
 *
 * delta:  g(ρ⁰e_i, ρ⁰e_j) + λ₁ g(ρ⁰e_i, e_j) + λ₂ δ_ij = 0 (the component form).
 * metric: ρ²_ij + λ₁ ρ_ij + λ₂ g_ij = 0 (the tensor identity read literally).
 * They differ only in the (3,3) row, where g_33 = −1.
 */
enum class Convention { delta, metric };

std::string to_string(Convention c);
Convention parse_convention(std::string_view text);

/// A + λ₁ B + λ₂ C = 0 for the frame pair (i, j), i <= j (zero-based).
struct Ein2Row {
  std::size_t i = 0;
  std::size_t j = 0;
  Scalar a;
  Scalar b;
  Scalar c;

  bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero(); }
  Scalar evaluate(const Scalar& l1, const Scalar& l2) const { return a + l1 * b + l2 * c; }
};

/// Rows in the order (1,1), (1,2), (1,3), (2,2), (2,3), (3,3).
struct Ein2System {
  std::array<Ein2Row, 6> rows;
  Convention convention = Convention::delta;
};

Ein2System build_system(const RicciData& rd, Convention convention = Convention::delta);

struct Lambdas {
  Scalar l1;
  Scalar l2;
};

/// Affine solution set of an Ein2System in the (λ₁, λ₂) plane.
struct Ein2Solution {
  enum class Kind { none, point, line, plane };

  Kind kind = Kind::none;
  /// kind == point.
  std::optional<Lambdas> point;
  /// kind == line: base + t * direction. direction is (1, d) or (0, 1).
  std::optional<Lambdas> base;
  std::optional<Lambdas> direction;
  /// Sup-norm of the row residuals at the reported solution; for kind == none,
  /// the smallest sup-norm achievable by any (λ₁, λ₂).
  Scalar residual;
  /// kind == none: a (λ₁, λ₂) attaining that smallest sup-norm.
  std::optional<Lambdas> best_fit;

  bool is_ein2() const { return kind != Kind::none; }
  bool contains(const Scalar& l1, const Scalar& l2) const;
  /// λ₂ fixed and λ₁ completely free: a line with direction (1, 0), or the plane.
  bool free_lambda1_at(const Scalar& l2) const;
  /// Some solution has this λ₂.
  bool has_lambda2(const Scalar& l2) const;
};

std::string to_string(Ein2Solution::Kind k);

/// Sup-norm of all row residuals at (λ₁, λ₂).
Scalar sup_residual(const Ein2System& sys, const Scalar& l1, const Scalar& l2);

Ein2Solution solve_lambdas(const Ein2System& sys);

/// ricci + build_system + solve_lambdas. Throws NotLieAlgebra.
Ein2Solution is_ein2(const StructureConstants& sc, Convention convention = Convention::delta);

}  // namespace ein2
