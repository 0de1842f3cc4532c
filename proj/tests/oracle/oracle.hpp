#pragma once

#include <gmpxx.h>

#include <array>
#include <optional>

#include "ein2/system.hpp"

/// Brute-force reference computations in plain mpq_class, sharing no code with ein2::core.
namespace oracle {

using Q = mpq_class;
using M3 = std::array<std::array<Q, 3>, 3>;
/// c[i][j][k] = c^k_ij.
using T3 = std::array<M3, 3>;

T3 brackets(const ein2::StructureConstants& sc);

/// sum over cyclic (i, j, k) of [[e_i, e_j], e_k], all components.
bool jacobi_holds(const T3& c);

/**
 * Solves the 27 linear equations of torsion-freeness and metric compatibility
 * for the connection by Gaussian elimination. gamma[i][j][k] = Gamma^k_ij.
 */
T3 connection(const T3& c);

/// Ricci tensor by tracing R(., e_j) e_k with R computed from connection matrices.
M3 ricci(const T3& c);

struct Ricci {
  M3 rho;
  M3 rho_op;
  M3 rho_sq;
};
Ricci ricci_data(const T3& c);

/// Affine solution set of rows a + l1 b + l2 c = 0, by row reduction.
struct Solution {
  ein2::Ein2Solution::Kind kind = ein2::Ein2Solution::Kind::none;
  std::optional<std::array<Q, 2>> point;
  std::optional<std::array<Q, 2>> base;
  std::optional<std::array<Q, 2>> direction;
};

/// The six Ein(2) rows rebuilt from the oracle Ricci data.
std::array<std::array<Q, 3>, 6> ein2_rows(const Ricci& r, ein2::Convention convention);
Solution solve(const std::array<std::array<Q, 3>, 6>& rows);

/// Same solution set as the production solver, in exact arithmetic.
bool agrees(const Solution& s, const ein2::Ein2Solution& prod);

}  // namespace oracle
