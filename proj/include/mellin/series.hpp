#pragma once

// Exact formal power series and the Taylor-coefficient families consumed by
// the residue formulas: c_{k,n}, d_{k,n}, g_{k,n}, h_{k,n}, Omega_{q,p},
// p_n, q_n and [x^{2n}] artanh^2 x.

#include <cstddef>
#include <vector>

#include "mellin/execution.hpp"
#include "mellin/exact.hpp"

namespace mellin::series {

using exact::Integer;
using exact::Rational;

/// Truncated power series sum_{k<=order} a_k x^k with exact coefficients.
/// Values are immutable; every operation returns a new series truncated to
/// the smaller order of its operands.
class PowerSeries {
 public:
  PowerSeries() = default;
  explicit PowerSeries(std::vector<Rational> coeffs);

  /// The constant 1 truncated at `order`.
  static PowerSeries one(std::size_t order);

  /// Number of known coefficients is order() + 1.
  std::size_t order() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficient of x^k; zero past the truncation order.
  Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

  PowerSeries truncate(std::size_t order) const;
  PowerSeries scale(const Rational& factor) const;
  /// f(x) -> f(x^2); the order doubles.
  PowerSeries compose_x2() const;
  /// 1/f; requires a nonzero constant term (std::domain_error otherwise).
  PowerSeries reciprocal() const;
  /// f^e by repeated squaring.
  PowerSeries pow(unsigned exponent, Execution exec = Execution::parallel) const;

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
  friend bool operator==(const PowerSeries& a, const PowerSeries& b) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// Cauchy product. The parallel kernel computes each output coefficient on
/// its own; the serial path is the reference implementation.
PowerSeries multiply(const PowerSeries& a, const PowerSeries& b, Execution exec = Execution::parallel);
inline PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) { return multiply(a, b); }

/// sinh(x)/x = sum x^{2k}/(2k+1)! up to x^order.
PowerSeries sinh_over_x(std::size_t order);

/// c_{0,n}..c_{K,n}: Taylor coefficients of (x/sinh x)^{2n+1}.
std::vector<Rational> c_coeffs(unsigned n, std::size_t max_k);
/// d_{0,n}..d_{K,n}: Taylor coefficients of (x/sinh x)^{2n}.
std::vector<Rational> d_coeffs(unsigned n, std::size_t max_k);

/// Single coefficients served from a process-wide cache (grown on demand).
/// Negative k yields 0.
Rational c_coeff(long k, unsigned n);
Rational d_coeff(long k, unsigned n);

/// Integer triangles of P_n(x) = x prod_{i<=n}(x^2 - i^2) = sum g_{k,n} x^{2k+1}
/// and 4^n Q_n(x) = prod_{i<=n}((2x+1)^2 - (2i-1)^2) = sum h_{k,n} (2x+1)^{2k}.
class GHTable {
 public:
  explicit GHTable(unsigned n_max);

  unsigned n_max() const { return n_max_; }
  /// Zero for k < 0, k > n or n outside the table.
  Integer g(long k, long n) const { return at(g_, k, n); }
  Integer h(long k, long n) const { return at(h_, k, n); }

 private:
  Integer at(const std::vector<std::vector<Integer>>& t, long k, long n) const;

  unsigned n_max_;
  std::vector<std::vector<Integer>> g_;
  std::vector<std::vector<Integer>> h_;
};

GHTable gh_table(unsigned n_max);

/// Omega_{q,p} = 4^{-q} sum_{k=0}^{q} C(2q+1,k) (2q+1-2k)^{2p}.
Rational omega(unsigned q, unsigned p);

/// 1/artanh x = sum p_n x^{2n-1}; 1/(sqrt(1-x^2) artanh x) = sum q_n x^{2n-1}.
struct ReciprocalCoeffs {
  std::vector<Rational> p;
  std::vector<Rational> q;
};

/// p_0..p_N and q_0..q_N. Requires N >= 1.
ReciprocalCoeffs reciprocal_coeffs(std::size_t n);

/// [x^{2n}] artanh^2 x.
Rational arctanh_sq_coeff(unsigned n);

/// artanh(x)/x = sum x^{2k}/(2k+1), in the variable y = x^2.
PowerSeries arctanh_over_x_in_x2(std::size_t order);

/// (1 - y)^{-1/2} = sum C(2k,k) y^k / 4^k.
PowerSeries inverse_sqrt_one_minus(std::size_t order);

}  // namespace mellin::series
