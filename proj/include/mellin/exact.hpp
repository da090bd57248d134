#pragma once

// Exact integers, rationals and the classical number tables (Bernoulli, Euler,
// harmonic, binomial, Eulerian of types A and B).

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace mellin::exact {

using Integer = mpz_class;

/// Signed rational number kept in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  /// Accepts unevaluated gmpxx integer expressions such as `a * b - 1`.
  template <typename Expr>
  Rational(const __gmp_expr<mpz_t, Expr>& value) : value_(Integer(value)) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& num, const Integer& den);
  explicit Rational(const mpq_class& q);

  /// Parses "a/b" or "a"; throws std::invalid_argument on malformed input.
  static Rational parse(std::string_view text);

  Integer num() const { return value_.get_num(); }
  Integer den() const { return value_.get_den(); }
  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  /// "num/den", always with an explicit denominator.
  std::string to_string() const;
  double to_double() const { return value_.get_d(); }
  const mpq_class& raw() const { return value_; }

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational abs(const Rational& r);
Rational pow(const Rational& base, unsigned exponent);

// ---------------------------------------------------------------------------
// Number tables. All tables are memoized, append-only and safe to read from
// several threads; they are prefilled up to index 64 on first use.

/// Bernoulli number B_n with B_1 = -1/2.
Rational bernoulli(unsigned n);

/// Euler (secant) number E_n: sech x = sum E_n x^n / n!.
Integer euler_number(unsigned n);

/// C(n, k); zero when k < 0 or k > n.
Integer binomial(long n, long k);

Integer factorial(unsigned n);

/// H_n = 1 + 1/2 + ... + 1/n with H_0 = 0.
Rational harmonic(unsigned n);

enum class EulerianKind { A, B };

/// Eulerian numbers. Type A: permutations of n elements with k descents
/// (row n has entries k = 0..n-1). Type B: signed permutations with k type-B
/// descents (row n has entries k = 0..n). Zero outside the row.
Integer eulerian(EulerianKind kind, long n, long k);

/// Full row n of the requested Eulerian triangle.
std::vector<Integer> eulerian_row(EulerianKind kind, unsigned n);

/// (-1)^k as an Integer.
inline Integer sign_power(long k) { return (k % 2 == 0) ? Integer(1) : Integer(-1); }

/// 2^k for k >= 0.
Integer pow2(unsigned k);

}  // namespace mellin::exact
