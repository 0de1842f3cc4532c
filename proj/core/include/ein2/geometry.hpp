#pragma once

#include "ein2/liealg.hpp"

namespace ein2 {

/**
 * @brief Levi-Civita connection coefficients in the frame.
 *
 * (i, j, k) holds Gamma^k_ij, the e_k-coefficient of nabla_{e_i} e_j. Frame
 * fields have constant coefficients, so these numbers determine the
 * connection completely.
 */
class ConnectionCoefficients {
 public:
  ConnectionCoefficients() = default;
  explicit ConnectionCoefficients(const Tensor<3>& gamma) : gamma_(gamma) {}

  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const { return gamma_(i, j, k); }
  const Tensor<3>& raw() const { return gamma_; }
  /// Coefficients of nabla_{e_i} e_j.
  Vec3 covariant(std::size_t i, std::size_t j) const;

 private:
  Tensor<3> gamma_;
};

/// R^l_ijk with R(e_i, e_j) e_k = sum_l R^l_ijk e_l, indexed (i, j, k, l).
class CurvatureTensor {
 public:
  CurvatureTensor() = default;
  explicit CurvatureTensor(const Tensor<4>& r) : r_(r) {}

  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return r_(i, j, k, l);
  }
  const Tensor<4>& raw() const { return r_; }

 private:
  Tensor<4> r_;
};

/**
 * Ricci data in the frame.
 *
 * rho_op uses the row ("transport") convention of the printed matrices:
 * rho0(e_i) = sum_j rho_op(i, j) e_j, so rho(i, j) = eps_j rho_op(i, j).
 */
struct RicciData {
  Mat3 rho;
  Mat3 rho_op;
  Mat3 rho_sq;
};

/// Koszul formula. Throws NotLieAlgebra when Jacobi fails.
ConnectionCoefficients levi_civita(const StructureConstants& sc);

/// R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z on frame fields.
CurvatureTensor curvature(const StructureConstants& sc, const ConnectionCoefficients& conn);

/// rho(X,Y) = -g(R(X,e1)Y,e1) - g(R(X,e2)Y,e2) + g(R(X,e3)Y,e3). Throws NotLieAlgebra.
RicciData ricci(const StructureConstants& sc);
RicciData ricci_from_curvature(const CurvatureTensor& curv);

/// Gamma^k_ij - Gamma^k_ji - c^k_ij.
Tensor<3> torsion_residual(const StructureConstants& sc, const ConnectionCoefficients& conn);
/// eps_k Gamma^k_ij + eps_j Gamma^j_ik.
Tensor<3> metric_residual(const ConnectionCoefficients& conn);
/// First Bianchi sum R(e_i,e_j)e_k + R(e_j,e_k)e_i + R(e_k,e_i)e_j, indexed (i, j, k, l).
Tensor<4> bianchi_residual(const CurvatureTensor& curv);

/**
 * The three connection entries that the G3 and G4 tables abbreviate:
 * {Gamma^3_12, Gamma^3_21, Gamma^2_31}, i.e. the e3-coefficient of
 * nabla_{e1} e2, the e3-coefficient of nabla_{e2} e1 and the e2-coefficient of
 * nabla_{e3} e1. For G3 these are a1 = (α − β − γ)/2, a2 = (α − β + γ)/2,
 * a3 = (α + β − γ)/2; for G4, b1 = α/2 + η − β, b2 = α/2 − η, b3 = α/2 + η.
 */
std::array<Scalar, 3> frame_abbreviations(const ConnectionCoefficients& conn);

}  // namespace ein2
