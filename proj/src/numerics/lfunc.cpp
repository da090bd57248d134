#include "mellin/lfunc.hpp"

#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <tuple>

namespace mellin::numerics {

using closed_form::BasisSymbol;
using closed_form::SymbolKind;
using exact::Rational;

namespace {

unsigned work_digits(unsigned digits) {
  if (digits == 0 || digits > kMaxDigits) {
    throw PrecisionError("precision must be in 1.." + std::to_string(kMaxDigits) + " digits (got " +
                         std::to_string(digits) + ")");
  }
  return digits + kGuardDigits;
}

void require_s(double s, double lower, bool strict, const char* what) {
  if (!std::isfinite(s) || (strict ? !(s > lower) : !(s >= lower))) {
    throw std::domain_error(std::string(what) + ": argument out of range (got s=" + std::to_string(s) + ")");
  }
}

BigReal from_double(double s, mpfr_prec_t bits) {
  BigReal out = BigReal::with_bits(std::max<mpfr_prec_t>(bits, 64));
  mpfr_set_d(out.raw(), s, MPFR_RNDN);
  return out;
}

// base^{-s} for a positive integer base.
BigReal inverse_power(unsigned long base, double s, mpfr_prec_t bits) {
  BigReal out = BigReal::with_bits(bits);
  if (s == std::floor(s) && std::fabs(s) < 1e9) {
    mpfr_set_ui(out.raw(), base, MPFR_RNDN);
    mpfr_pow_si(out.raw(), out.raw(), -static_cast<long>(s), MPFR_RNDN);
    return out;
  }
  mpfr_set_ui(out.raw(), base, MPFR_RNDN);
  mpfr_log(out.raw(), out.raw(), MPFR_RNDN);
  out *= from_double(-s, bits);
  return exp(out);
}

BigReal log_ui(unsigned long value, mpfr_prec_t bits) {
  BigReal out = BigReal::with_bits(bits);
  mpfr_set_ui(out.raw(), value, MPFR_RNDN);
  mpfr_log(out.raw(), out.raw(), MPFR_RNDN);
  return out;
}

// Sum (-1)^k f(odd_step ? 2k+1 : k+1) with optional -ln weight.
BigReal dirichlet_alternating(double s, unsigned digits, bool odd_only, bool derivative, unsigned extra = 0) {
  const unsigned wd = work_digits(digits) + extra;
  const unsigned terms = alternating_terms(digits + extra);
  if (terms > alternating_term_cap(digits + extra)) {
    throw PrecisionError("alternating series needs " + std::to_string(terms) + " terms, over the cap");
  }
  const mpfr_prec_t bits = digits_to_bits(wd);
  BigReal sum = alternating_sum(terms, bits, [&](unsigned k, mpfr_prec_t b) {
    const unsigned long m = odd_only ? 2UL * k + 1 : k + 1UL;
    BigReal term = inverse_power(m, s, b);
    if (derivative) term *= log_ui(m, b);
    return term;
  });
  return derivative ? -sum : sum;
}

// 1 - 2^{1-s}
BigReal one_minus_two_pow(double s, mpfr_prec_t bits) {
  BigReal t = inverse_power(2, s - 1, bits);
  BigReal one = BigReal::with_bits(bits);
  mpfr_set_ui(one.raw(), 1, MPFR_RNDN);
  return one - t;
}

// Extra digits lost to 1 - 2^{1-s} near s = 1.
unsigned pole_guard(double s) {
  const double gap = s - 1.0;
  return gap >= 0.1 ? 0U : static_cast<unsigned>(std::ceil(-std::log10(gap))) + 1;
}

BigReal psi_integer(unsigned n, unsigned wd) {
  // psi(n) = H_{n-1} - gamma
  return BigReal(exact::harmonic(n - 1), wd) - euler_gamma(wd);
}

}  // namespace

unsigned alternating_terms(unsigned digits) {
  return static_cast<unsigned>(std::ceil(1.31 * (digits + kGuardDigits))) + 8;
}

unsigned alternating_term_cap(unsigned digits) { return 4 * (digits + kGuardDigits); }

BigReal eta(double s, unsigned digits) {
  require_s(s, 1.0, false, "eta");
  return dirichlet_alternating(s, digits, false, false);
}

BigReal eta_prime(double s, unsigned digits) {
  require_s(s, 1.0, false, "eta_prime");
  return dirichlet_alternating(s, digits, false, true);
}

BigReal beta(double s, unsigned digits) {
  require_s(s, 1.0, false, "beta");
  return dirichlet_alternating(s, digits, true, false);
}

BigReal beta_prime(double s, unsigned digits) {
  require_s(s, 1.0, false, "beta_prime");
  return dirichlet_alternating(s, digits, true, true);
}

BigReal zeta_prime(double s, unsigned digits) {
  require_s(s, 1.0, true, "zeta_prime");
  const unsigned extra = pole_guard(s);
  const unsigned wd = work_digits(digits) + extra;
  const mpfr_prec_t bits = digits_to_bits(wd);
  const BigReal denom = one_minus_two_pow(s, bits);
  BigReal zeta_s = (s == std::floor(s) && static_cast<long>(s) % 2 == 0)
                       ? zeta_even(static_cast<unsigned>(s) / 2, digits + extra)
                       : dirichlet_alternating(s, digits, false, false, extra) / denom;
  BigReal t = inverse_power(2, s - 1, bits) * ln2(wd) * zeta_s;
  return ((dirichlet_alternating(s, digits, false, true, extra) - t) / denom).with_digits(work_digits(digits));
}

BigReal zeta_even(unsigned k, unsigned digits) {
  if (k == 0) throw std::domain_error("zeta_even: k must be >= 1");
  const unsigned wd = work_digits(digits);
  const Rational coeff = exact::bernoulli(2 * k) * Rational(exact::sign_power(k + 1)) /
                         Rational(2 * exact::factorial(2 * k));
  BigReal two_pi = pi(wd) * 2L;
  return BigReal(coeff, wd) * pow(two_pi, static_cast<long>(2 * k));
}

BigReal beta_odd(unsigned k, unsigned digits) {
  const unsigned wd = work_digits(digits);
  const Rational coeff = Rational(exact::sign_power(k) * exact::euler_number(2 * k)) /
                         Rational(exact::pow2(2 * k + 2) * exact::factorial(2 * k));
  return BigReal(coeff, wd) * pow(pi(wd), static_cast<long>(2 * k + 1));
}

BigReal zeta_prime_even(unsigned p, unsigned digits) { return zeta_prime(2.0 * p + 2.0, digits); }

BigReal beta_prime_odd(unsigned p, unsigned digits) { return beta_prime(2.0 * p + 1.0, digits); }

BigReal eta_prime_neg(unsigned i, unsigned digits) {
  const unsigned wd = work_digits(digits);
  const unsigned s = 2 * i + 2;
  // zeta(-2i-1) = -B_{2i+2} / (2i+2)
  const Rational zeta_neg_q = -exact::bernoulli(s) / Rational(static_cast<long>(s));
  const BigReal zeta_neg(zeta_neg_q, wd);
  BigReal bracket = -log(pi(wd) * 2L) + psi_integer(s, wd) + zeta_prime_even(i, digits) / zeta_even(i + 1, digits);
  const BigReal zeta_prime_neg = -zeta_neg * bracket;
  const exact::Integer four = exact::pow2(s);
  return BigReal(Rational(four) * zeta_neg_q, wd) * ln2(wd) + BigReal(Rational(1 - four), wd) * zeta_prime_neg;
}

BigReal beta_prime_neg(unsigned i, unsigned digits) {
  const unsigned wd = work_digits(digits);
  const unsigned s = 2 * i + 1;
  const BigReal half_euler(Rational(exact::euler_number(2 * i), exact::Integer(2)), wd);
  const BigReal two_over_pi = BigReal(2L, wd) / pi(wd);
  BigReal bracket = log(two_over_pi) + psi_integer(s, wd) + beta_prime_odd(i, digits) / beta_odd(i, digits);
  return -half_euler * bracket;
}

BigReal eta_prime_neg_alt(unsigned i, unsigned digits) {
  const unsigned wd = work_digits(digits);
  const long s = 2L * i + 2;
  const BigReal sb(s, wd);
  const BigReal l2 = ln2(wd);
  const BigReal two_s = pow(BigReal(2L, wd), s);          // 2^s
  const BigReal two_1ms = pow(BigReal(2L, wd), 1 - s);    // 2^{1-s}
  const BigReal one(1L, wd);
  const BigReal two_pi = pi(wd) * 2L;
  // eta(1-s) = 2 (2 pi)^{-s} cos(pi s/2) Gamma(s) (1-2^s)/(1-2^{1-s}) eta(s); cos(pi s/2) = (-1)^{i+1}
  const BigReal eta_s = eta(static_cast<double>(s), digits);
  BigReal factor = pow(two_pi, -s) * 2L * gamma(sb) * (one - two_s) / (one - two_1ms);
  if ((i + 1) % 2 == 1) factor = -factor;
  const BigReal eta_neg = factor * eta_s;
  const BigReal log_factor_prime = -(two_s * l2) / (one - two_s) - (two_1ms * l2) / (one - two_1ms) - log(two_pi) +
                                   digamma(sb);
  return -eta_neg * (log_factor_prime + eta_prime(static_cast<double>(s), digits) / eta_s);
}

BigReal beta_prime_neg_alt(unsigned i, unsigned digits) {
  const unsigned wd = work_digits(digits);
  const long s = 2L * i + 1;
  const BigReal sb(s, wd);
  const BigReal two_over_pi = BigReal(2L, wd) / pi(wd);
  BigReal lead = pow(two_over_pi, s) * gamma(sb);
  if (i % 2 == 1) lead = -lead;
  const BigReal b = beta(static_cast<double>(s), digits);
  return -lead * (b * (log(two_over_pi) + digamma(sb)) + beta_prime(static_cast<double>(s), digits));
}

std::pair<BigReal, BigReal> hurwitz_zeta_and_derivative(double s, const BigReal& a, unsigned digits) {
  require_s(s, 1.0, true, "hurwitz_zeta");
  if (a.sign() <= 0) throw std::domain_error("hurwitz_zeta: requires a > 0");
  const unsigned extra = pole_guard(s);
  const unsigned wd = work_digits(digits) + extra;
  const mpfr_prec_t bits = digits_to_bits(wd);
  const unsigned n_direct = std::max(20U, wd) + static_cast<unsigned>(std::ceil(s));
  const BigReal sb = from_double(s, bits);
  BigReal value = BigReal::with_bits(bits);
  BigReal deriv = BigReal::with_bits(bits);
  for (unsigned k = 0; k < n_direct; ++k) {
    BigReal base = a + BigReal(static_cast<long>(k), wd);
    BigReal lb = log(base);
    BigReal term = exp(-(sb * lb));
    value += term;
    deriv -= term * lb;
  }
  const BigReal x = a + BigReal(static_cast<long>(n_direct), wd);
  const BigReal lx = log(x);
  const BigReal one(1L, wd);
  const BigReal sm1 = sb - one;
  const BigReal x_pow_1ms = exp(-(sm1 * lx));  // x^{1-s}
  const BigReal x_pow_ms = x_pow_1ms / x;       // x^{-s}
  value += x_pow_1ms / sm1;
  deriv -= lx * x_pow_1ms / sm1 + x_pow_1ms / (sm1 * sm1);
  value += x_pow_ms / 2L;
  deriv -= lx * x_pow_ms / 2L;
  // Tail terms B_{2j}/(2j)! P_j(s) x^{-s-2j+1}, P_j(s) = s (s+1) ... (s+2j-2),
  // summed until both contributions drop below 10^-wd.
  const BigReal eps = ten_pow_neg(wd, wd);
  const unsigned max_terms = 2 * wd + 10;
  BigReal poly = sb;       // P_1
  BigReal poly_d(1L, wd);  // P_1'
  BigReal x_pow = x_pow_ms / x;
  const BigReal inv_x2 = one / (x * x);
  bool settled = false;
  for (unsigned j = 1; j <= max_terms && !settled; ++j) {
    if (j >= 2) {
      // multiply by (s + 2j - 3)(s + 2j - 2)
      const BigReal f1 = sb + BigReal(static_cast<long>(2 * j - 3), wd);
      const BigReal f2 = sb + BigReal(static_cast<long>(2 * j - 2), wd);
      const BigReal f = f1 * f2;
      const BigReal fd = f1 + f2;
      poly_d = poly_d * f + poly * fd;
      poly = poly * f;
      x_pow *= inv_x2;
    }
    const BigReal coeff(exact::bernoulli(2 * j) / Rational(exact::factorial(2 * j)), wd);
    const BigReal dv = coeff * poly * x_pow;
    const BigReal dd = coeff * x_pow * (poly_d - lx * poly);
    value += dv;
    deriv += dd;
    settled = abs(dv) < eps && abs(dd) < eps;
  }
  if (!settled) throw PrecisionError("Euler-Maclaurin tail did not settle at " + std::to_string(digits) + " digits");
  return {value, deriv};
}

BigReal zeta_prime_em(double s, unsigned digits) {
  return hurwitz_zeta_and_derivative(s, BigReal(1L, work_digits(digits)), digits).second;
}

BigReal beta_prime_em(double s, unsigned digits) {
  const unsigned wd = work_digits(digits);
  const auto [z1, d1] = hurwitz_zeta_and_derivative(s, BigReal(Rational(1, 4), wd), digits);
  const auto [z3, d3] = hurwitz_zeta_and_derivative(s, BigReal(Rational(3, 4), wd), digits);
  const BigReal four_ms = inverse_power(4, s, digits_to_bits(wd));
  const BigReal beta_s = four_ms * (z1 - z3);
  return -(log(BigReal(4L, wd)) * beta_s) + four_ms * (d1 - d3);
}

namespace {

using CacheKey = std::tuple<int, unsigned, unsigned>;

class ConstantCache {
 public:
  template <typename Compute>
  BigReal get(const CacheKey& key, Compute&& compute) {
    {
      std::shared_lock lock(mutex_);
      auto it = values_.find(key);
      if (it != values_.end()) {
        ++hits_;
        return it->second;
      }
    }
    BigReal fresh = compute();
    std::unique_lock lock(mutex_);
    ++misses_;
    return values_.try_emplace(key, std::move(fresh)).first->second;
  }

  CacheStats stats() {
    std::shared_lock lock(mutex_);
    return CacheStats{values_.size(), hits_.load(), misses_};
  }

 private:
  std::shared_mutex mutex_;
  std::map<CacheKey, BigReal> values_;
  std::atomic<std::size_t> hits_{0};
  std::size_t misses_ = 0;
};

ConstantCache& constant_cache() {
  static ConstantCache cache;
  return cache;
}

BigReal compute_symbol(const BasisSymbol& symbol, unsigned digits) {
  const unsigned wd = work_digits(digits);
  switch (symbol.kind) {
    case SymbolKind::zeta_prime_ratio:
      return zeta_prime_even(symbol.index, digits) / pow(pi(wd), static_cast<long>(2 * symbol.index + 2));
    case SymbolKind::beta_prime_ratio:
      return beta_prime_odd(symbol.index, digits) / pow(pi(wd), static_cast<long>(2 * symbol.index + 1));
    case SymbolKind::eta_prime_neg:
      return eta_prime_neg(symbol.index, digits);
    case SymbolKind::beta_prime_neg:
      return beta_prime_neg(symbol.index, digits);
    case SymbolKind::one:
      return BigReal(1L, wd);
    case SymbolKind::ln_pi:
      return log(pi(wd));
    case SymbolKind::ln2:
      return ln2(wd);
  }
  throw std::logic_error("unknown basis symbol");
}

}  // namespace

BigReal symbol_value(const BasisSymbol& symbol, unsigned digits) {
  work_digits(digits);
  const CacheKey key{static_cast<int>(symbol.kind), symbol.index, digits};
  return constant_cache().get(key, [&] { return compute_symbol(symbol, digits); });
}

BigReal eval_closed_form(const closed_form::ClosedForm& cf, unsigned digits) {
  const unsigned wd = work_digits(digits);
  BigReal sum(wd);
  for (const auto& [symbol, coeff] : cf.terms()) sum += BigReal(coeff, wd) * symbol_value(symbol, digits);
  return sum;
}

CacheStats constant_cache_stats() { return constant_cache().stats(); }

std::pair<BigReal, BigReal> mellin_bound_gamma_ratio(const BigReal& s, unsigned digits) {
  const unsigned wd = work_digits(digits);
  const BigReal one(1L, wd);
  if (!(s > one)) throw std::domain_error("mellin bounds: requires s > 1");
  const BigReal ratio = exp(lngamma((s - one) / 2L) - lngamma(s / 2L));
  const BigReal upper = sqrt(pi(wd)) / 2L * ratio;
  return {upper / s, upper};
}

MellinBounds mellin_bounds(const BigReal& s, unsigned digits) {
  const unsigned wd = work_digits(digits);
  const BigReal one(1L, wd);
  auto [lower2, upper2] = mellin_bound_gamma_ratio(s, digits);
  return MellinBounds{BigReal(2L, wd) / (s * s - one), one / (s - one), std::move(lower2), std::move(upper2)};
}

}  // namespace mellin::numerics
