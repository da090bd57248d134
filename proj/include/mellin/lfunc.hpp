#pragma once

// High-precision values of the Dirichlet eta/beta and Riemann zeta functions,
// their derivatives, and evaluation of closed forms.

#include <stdexcept>
#include <utility>

#include "mellin/bigreal.hpp"
#include "mellin/closed_form.hpp"

namespace mellin::numerics {

/// Guard digits carried by every composite evaluation. Returned values are
/// held at digits + kGuardDigits precision.
inline constexpr unsigned kGuardDigits = 15;
/// Largest precision accepted by the series evaluators.
inline constexpr unsigned kMaxDigits = 1000;

/// The requested accuracy cannot be reached within the term cap.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sum_{k>=0} (-1)^k a_k by Chebyshev-weighted (Cohen-Villegas-Zagier)
/// acceleration with `terms` terms; a(k, bits) returns a_k.
template <typename Term>
BigReal alternating_sum(unsigned terms, mpfr_prec_t bits, Term&& a);

/// Number of accelerated terms for `digits` correct digits, and its cap.
unsigned alternating_terms(unsigned digits);
unsigned alternating_term_cap(unsigned digits);

// Positive-argument series, s >= 1. Error below 10^{-digits}.
BigReal eta(double s, unsigned digits);
BigReal eta_prime(double s, unsigned digits);
BigReal beta(double s, unsigned digits);
BigReal beta_prime(double s, unsigned digits);
/// zeta'(s) for s > 1 through eta and eta'.
BigReal zeta_prime(double s, unsigned digits);

/// zeta(2k) = (-1)^{k+1} B_{2k} (2 pi)^{2k} / (2 (2k)!), k >= 1.
BigReal zeta_even(unsigned k, unsigned digits);
/// beta(2k+1) = (-1)^k E_{2k} pi^{2k+1} / (4^{k+1} (2k)!).
BigReal beta_odd(unsigned k, unsigned digits);

/// zeta'(2p+2), unscaled.
BigReal zeta_prime_even(unsigned p, unsigned digits);
/// beta'(2p+1), unscaled.
BigReal beta_prime_odd(unsigned p, unsigned digits);
/// eta'(-2i-1) from the differentiated zeta functional equation.
BigReal eta_prime_neg(unsigned i, unsigned digits);
/// beta'(-2i) from the differentiated beta functional equation.
BigReal beta_prime_neg(unsigned i, unsigned digits);

/// Second arrangements: eta'(-2i-1) through the eta functional equation with
/// numeric eta(s), eta'(s); beta'(-2i) with numeric beta(s) and Gamma(s).
BigReal eta_prime_neg_alt(unsigned i, unsigned digits);
BigReal beta_prime_neg_alt(unsigned i, unsigned digits);

/// Euler-Maclaurin evaluation of the Hurwitz zeta function and its s-derivative
/// (s > 1, a > 0); independent of the alternating-series path.
std::pair<BigReal, BigReal> hurwitz_zeta_and_derivative(double s, const BigReal& a, unsigned digits);
/// zeta'(s) and beta'(s) through the Hurwitz path (s > 1).
BigReal zeta_prime_em(double s, unsigned digits);
BigReal beta_prime_em(double s, unsigned digits);

/// Numeric value of a basis symbol (cached).
BigReal symbol_value(const closed_form::BasisSymbol& symbol, unsigned digits);
/// Sum of coeff * symbol value.
BigReal eval_closed_form(const closed_form::ClosedForm& cf, unsigned digits);

/// Cache statistics for tests.
struct CacheStats {
  std::size_t entries = 0;
  std::size_t hits = 0;
  std::size_t misses = 0;
};
CacheStats constant_cache_stats();

/// Bounds 2/(s^2-1) < Phi1(s) < 1/(s-1) and
/// sqrt(pi)/(2s) G((s-1)/2)/G(s/2) < Phi2(s) < sqrt(pi)/2 G((s-1)/2)/G(s/2).
struct MellinBounds {
  BigReal phi1_lower, phi1_upper;
  BigReal phi2_lower, phi2_upper;
};
MellinBounds mellin_bounds(const BigReal& s, unsigned digits);
/// The Phi2 pair (lower, upper).
std::pair<BigReal, BigReal> mellin_bound_gamma_ratio(const BigReal& s, unsigned digits);

// ---------------------------------------------------------------------------

template <typename Term>
BigReal alternating_sum(unsigned terms, mpfr_prec_t bits, Term&& a) {
  BigReal d = BigReal::with_bits(bits);
  // d = ((3 + sqrt 8)^n + (3 + sqrt 8)^{-n}) / 2
  mpfr_set_ui(d.raw(), 8, MPFR_RNDN);
  mpfr_sqrt(d.raw(), d.raw(), MPFR_RNDN);
  mpfr_add_ui(d.raw(), d.raw(), 3, MPFR_RNDN);
  mpfr_pow_ui(d.raw(), d.raw(), terms, MPFR_RNDN);
  BigReal inv = BigReal::with_bits(bits);
  mpfr_ui_div(inv.raw(), 1, d.raw(), MPFR_RNDN);
  d += inv;
  d /= 2L;
  BigReal b = BigReal::with_bits(bits);
  mpfr_set_si(b.raw(), -1, MPFR_RNDN);
  BigReal c = -d;
  BigReal sum = BigReal::with_bits(bits);
  const long n = static_cast<long>(terms);
  for (long k = 0; k < n; ++k) {
    c = b - c;
    sum += c * a(static_cast<unsigned>(k), bits);
    // b *= (k+n)(k-n) / ((k+1/2)(k+1)) = 2(k+n)(k-n) / ((2k+1)(k+1))
    b *= 2 * (k + n) * (k - n);
    b /= (2 * k + 1) * (k + 1);
  }
  return sum / d;
}

}  // namespace mellin::numerics
