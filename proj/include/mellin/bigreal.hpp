#pragma once

// Multiprecision real numbers over MPFR with per-value precision.

#include <compare>
#include <string>
#include <utility>

#include <mpfr.h>

#include "mellin/exact.hpp"

namespace mellin::numerics {

/// Bits needed to hold `digits` decimal digits (plus a small pad).
mpfr_prec_t digits_to_bits(unsigned digits);
/// Decimal digits represented by `bits`.
unsigned bits_to_digits(mpfr_prec_t bits);

/// Widens MPFR's exponent range to its limits; idempotent and called by
/// every BigReal constructor.
void ensure_wide_exponent_range();

/// RAII MPFR value. Binary operations produce a result with the larger of
/// the operand precisions; all rounding is to nearest.
class BigReal {
 public:
  explicit BigReal(unsigned digits = 30);
  BigReal(long value, unsigned digits);
  BigReal(double value, unsigned digits);
  BigReal(const exact::Rational& value, unsigned digits);
  /// Parses a decimal string; throws std::invalid_argument on failure.
  static BigReal parse(const std::string& text, unsigned digits);
  static BigReal with_bits(mpfr_prec_t bits);

  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  mpfr_prec_t bits() const { return mpfr_get_prec(value_); }
  unsigned digits() const { return bits_to_digits(bits()); }
  /// Copy rounded to a new precision.
  BigReal with_digits(unsigned digits) const;

  mpfr_ptr raw() { return value_; }
  mpfr_srcptr raw() const { return value_; }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  int sign() const { return mpfr_sgn(value_); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  /// Base-10 exponent e with 10^(e-1) <= |x| < 10^e roughly; very negative for zero.
  long exponent10() const;

  /// Fixed-point decimal with `decimals` digits after the point, truncated toward zero.
  std::string to_fixed_truncated(unsigned decimals) const;
  /// Scientific notation with `significant` digits, rounded to nearest.
  std::string to_scientific(unsigned significant) const;

  BigReal operator-() const;
  BigReal& operator+=(const BigReal& rhs);
  BigReal& operator-=(const BigReal& rhs);
  BigReal& operator*=(const BigReal& rhs);
  BigReal& operator/=(const BigReal& rhs);
  BigReal& operator*=(long rhs);
  BigReal& operator/=(long rhs);

  friend BigReal operator+(BigReal a, const BigReal& b) { return a += b; }
  friend BigReal operator-(BigReal a, const BigReal& b) { return a -= b; }
  friend BigReal operator*(BigReal a, const BigReal& b) { return a *= b; }
  friend BigReal operator/(BigReal a, const BigReal& b) { return a /= b; }
  friend BigReal operator*(BigReal a, long b) { return a *= b; }
  friend BigReal operator/(BigReal a, long b) { return a /= b; }

  friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const BigReal& a, const BigReal& b);

 private:
  void widen_to(mpfr_prec_t bits);
  mpfr_t value_;
};

BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal log(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal sinh(const BigReal& x);
BigReal cosh(const BigReal& x);
BigReal tanh(const BigReal& x);
BigReal pow(const BigReal& base, const BigReal& exponent);
BigReal pow(const BigReal& base, long exponent);
BigReal gamma(const BigReal& x);
BigReal lngamma(const BigReal& x);
BigReal digamma(const BigReal& x);
BigReal max(const BigReal& a, const BigReal& b);

BigReal pi(unsigned digits);
BigReal euler_gamma(unsigned digits);
BigReal ln2(unsigned digits);

/// 10^{-k} at the given precision.
BigReal ten_pow_neg(unsigned k, unsigned digits);

}  // namespace mellin::numerics
