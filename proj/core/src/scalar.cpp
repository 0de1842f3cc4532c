#include "ein2/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace ein2 {

namespace {

long double rational_to_long_double(const Rational& q) {
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (mpz_sizeinbase(num.get_mpz_t(), 2) < 63 && mpz_sizeinbase(den.get_mpz_t(), 2) < 63) {
    return static_cast<long double>(mpz_get_si(num.get_mpz_t())) /
           static_cast<long double>(mpz_get_si(den.get_mpz_t()));
  }
  mpf_class f(q, 192);
  mp_exp_t exp = 0;
  std::string digits = f.get_str(exp, 10, 40);
  if (digits.empty()) return 0.0L;
  bool negative = digits.front() == '-';
  if (negative) digits.erase(digits.begin());
  std::string text = (negative ? "-0." : "0.") + digits + "e" + std::to_string(exp);
  return std::strtold(text.c_str(), nullptr);
}

[[noreturn]] void bad_literal(std::string_view text) {
  throw std::invalid_argument("not a number: '" + std::string(text) + "'");
}

Rational parse_decimal(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  std::string digits;
  long exponent = 0;
  bool seen_digit = false;
  bool seen_point = false;
  for (; pos < text.size(); ++pos) {
    char ch = text[pos];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits.push_back(ch);
      seen_digit = true;
      if (seen_point) --exponent;
    } else if (ch == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) bad_literal(text);
  if (pos < text.size()) {
    if (text[pos] != 'e' && text[pos] != 'E') bad_literal(text);
    std::string rest(text.substr(pos + 1));
    if (rest.empty()) bad_literal(text);
    char* end = nullptr;
    long e = std::strtol(rest.c_str(), &end, 10);
    if (*end != '\0' || std::abs(e) > 4000) bad_literal(text);
    exponent += e;
  }
  mpz_class mantissa(digits, 10);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::abs(exponent)));
  Rational q = exponent >= 0 ? Rational(mantissa * scale) : Rational(mantissa, scale);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

}  // namespace

Scalar::Scalar(Rational q) : value_(std::move(q)) {
  std::get<Rational>(value_).canonicalize();
}

Scalar Scalar::ratio(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return Scalar(std::move(q));
}

Scalar Scalar::approx(long double v, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("approximate tolerance must be positive");
  return Scalar(Approx{v, tol});
}

Scalar Scalar::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) bad_literal(text);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Rational num = parse_decimal(text.substr(0, slash));
    Rational den = parse_decimal(text.substr(slash + 1));
    if (den == 0) throw std::domain_error("zero denominator in '" + std::string(text) + "'");
    return Scalar(Rational(num / den));
  }
  return Scalar(parse_decimal(text));
}

const Rational& Scalar::rational() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return *q;
  throw std::logic_error("approximate scalar has no exact rational value");
}

long double Scalar::value() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return rational_to_long_double(*q);
  return std::get<Approx>(value_).value;
}

double Scalar::tolerance() const {
  if (const auto* a = std::get_if<Approx>(&value_)) return a->tol;
  return 0.0;
}

bool Scalar::is_zero() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return sgn(*q) == 0;
  const auto& a = std::get<Approx>(value_);
  return std::fabs(a.value) <= a.tol;
}

int Scalar::sign() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return sgn(*q);
  const auto& a = std::get<Approx>(value_);
  if (std::fabs(a.value) <= a.tol) return 0;
  return a.value > 0 ? 1 : -1;
}

Scalar Scalar::to_approx(double tol) const {
  if (!is_exact()) return *this;
  return approx(value(), tol);
}

Scalar Scalar::operator-() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return Scalar(Rational(-*q));
  const auto& a = std::get<Approx>(value_);
  return Scalar(Approx{-a.value, a.tol});
}

template <class ExactOp, class ApproxOp>
Scalar& Scalar::apply(const Scalar& o, ExactOp exact, ApproxOp approx_op) {
  auto* lhs = std::get_if<Rational>(&value_);
  const auto* rhs = std::get_if<Rational>(&o.value_);
  if (lhs && rhs) {
    exact(*lhs, *rhs);
    return *this;
  }
  double tol = std::max(tolerance(), o.tolerance());
  long double v = approx_op(value(), o.value());
  value_ = Approx{v, tol};
  return *this;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  return apply(o, [](Rational& a, const Rational& b) { a += b; },
               [](long double a, long double b) { return a + b; });
}

Scalar& Scalar::operator-=(const Scalar& o) {
  return apply(o, [](Rational& a, const Rational& b) { a -= b; },
               [](long double a, long double b) { return a - b; });
}

Scalar& Scalar::operator*=(const Scalar& o) {
  return apply(o, [](Rational& a, const Rational& b) { a *= b; },
               [](long double a, long double b) { return a * b; });
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  return apply(o, [](Rational& a, const Rational& b) { a /= b; },
               [](long double a, long double b) { return a / b; });
}

std::string Scalar::to_string() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return q->get_str();
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", static_cast<double>(std::get<Approx>(value_).value));
  return buf;
}

Scalar abs(const Scalar& x) { return x.sign() < 0 ? -x : x; }

Scalar pow(Scalar x, unsigned n) {
  Scalar result(1);
  while (n > 0) {
    if (n & 1U) result *= x;
    x *= x;
    n >>= 1U;
  }
  return result;
}

Scalar sqrt(const Scalar& x, double tol) {
  if (x.sign() < 0) throw std::domain_error("square root of a negative number");
  if (x.is_exact()) {
    const Rational& q = x.rational();
    if (mpz_perfect_square_p(q.get_num_mpz_t()) && mpz_perfect_square_p(q.get_den_mpz_t())) {
      mpz_class num, den;
      mpz_sqrt(num.get_mpz_t(), q.get_num_mpz_t());
      mpz_sqrt(den.get_mpz_t(), q.get_den_mpz_t());
      return Scalar(Rational(num, den));
    }
    return Scalar::approx(std::sqrt(x.value()), tol);
  }
  long double v = x.value();
  return Scalar::approx(v <= 0 ? 0.0L : std::sqrt(v), x.tolerance());
}

}  // namespace ein2
