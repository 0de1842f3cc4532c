#pragma once

#include <vector>

#include "ein2/system.hpp"

namespace ein2 {

/// One printed component equation A + λ₁ B + λ₂ C = 0.
struct PrintedRow {
  Scalar a;
  Scalar b;
  Scalar c;

  bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero(); }
};

/// Hard-coded connection table of the family, evaluated at the point.
ConnectionCoefficients printed_connection(const FamilyParams& p);

/// Hard-coded Ricci operator matrix of the family (row convention).
Mat3 printed_ricci_operator(const FamilyParams& p);

/// Hard-coded Ein(2) system of the family, in printed order.
std::vector<PrintedRow> printed_system(const FamilyParams& p);

/**
 * True when the nonzero printed rows and the nonzero rows of the computed
 * delta-convention system agree as sets up to the sign of each row.
 */
bool match_printed_system(const FamilyParams& p);

}  // namespace ein2
