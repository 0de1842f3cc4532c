#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <variant>

namespace ein2 {

using Rational = mpq_class;

/// Default tolerance for approximate scalars.
inline constexpr double kDefaultTolerance = 1e-9;

/**
 * @brief A real number that is either an exact rational or a floating value
 * carried together with the tolerance used for every equality test on it.
 *
 * Exact values are closed under + - * / with no rounding. Any operation that
 * mixes an exact and an approximate operand yields an approximate result; two
 * approximate operands keep the larger tolerance.
 */
class Scalar {
 public:
  Scalar() : value_(Rational(0)) {}
  Scalar(int v) : value_(Rational(v)) {}   // NOLINT(google-explicit-constructor)
  Scalar(long v) : value_(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational q);                      // NOLINT(google-explicit-constructor)

  static Scalar ratio(long num, long den);
  static Scalar approx(long double v, double tol = kDefaultTolerance);

  /// Parses "p", "p/q", or a decimal literal ("-1.25", "3e-2") exactly.
  static Scalar parse(std::string_view text);

  bool is_exact() const { return std::holds_alternative<Rational>(value_); }
  const Rational& rational() const;
  long double value() const;
  double to_double() const { return static_cast<double>(value()); }
  /// Zero for exact scalars.
  double tolerance() const;

  bool is_zero() const;
  /// -1, 0 or +1; approximate values within tolerance of zero give 0.
  int sign() const;

  /// Same value in approximate mode (no-op for approximate scalars).
  Scalar to_approx(double tol = kDefaultTolerance) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  /// Throws std::domain_error on an (exact or within-tolerance) zero divisor.
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /// Tolerant equality: exact comparison for exact pairs, |a - b| <= tol otherwise.
  friend bool operator==(const Scalar& a, const Scalar& b) { return (a - b).is_zero(); }
  friend bool operator<(const Scalar& a, const Scalar& b) { return (a - b).sign() < 0; }
  friend bool operator>(const Scalar& a, const Scalar& b) { return (a - b).sign() > 0; }

  /// Exact "p" / "p/q" text, or 17 significant digits for approximate values.
  std::string to_string() const;

 private:
  struct Approx {
    long double value;
    double tol;
  };
  explicit Scalar(Approx a) : value_(a) {}

  template <class ExactOp, class ApproxOp>
  Scalar& apply(const Scalar& o, ExactOp exact, ApproxOp approx);

  std::variant<Rational, Approx> value_;
};

Scalar abs(const Scalar& x);
Scalar pow(Scalar x, unsigned n);
/// Exact when x is the square of a rational, approximate otherwise.
/// Throws std::domain_error for negative x.
Scalar sqrt(const Scalar& x, double tol = kDefaultTolerance);

}  // namespace ein2
