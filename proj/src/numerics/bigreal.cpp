#include "mellin/bigreal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mellin::numerics {

mpfr_prec_t digits_to_bits(unsigned digits) {
  return static_cast<mpfr_prec_t>(std::ceil(static_cast<double>(digits) * 3.3219280948873623)) + 8;
}

unsigned bits_to_digits(mpfr_prec_t bits) {
  const double d = static_cast<double>(std::max<mpfr_prec_t>(bits - 8, 1)) / 3.3219280948873623;
  return static_cast<unsigned>(std::max(1.0, std::floor(d)));
}

// The exponent range is thread-local in thread-safe MPFR builds.
void ensure_wide_exponent_range() {
  thread_local bool widened = false;
  if (!widened) {
    mpfr_set_emin(mpfr_get_emin_min());
    mpfr_set_emax(mpfr_get_emax_max());
    widened = true;
  }
}

BigReal::BigReal(unsigned digits) {
  ensure_wide_exponent_range();
  mpfr_init2(value_, digits_to_bits(digits));
  mpfr_set_zero(value_, 1);
}

BigReal::BigReal(long value, unsigned digits) : BigReal(digits) { mpfr_set_si(value_, value, MPFR_RNDN); }

BigReal::BigReal(double value, unsigned digits) : BigReal(digits) { mpfr_set_d(value_, value, MPFR_RNDN); }

BigReal::BigReal(const exact::Rational& value, unsigned digits) : BigReal(digits) {
  mpfr_set_q(value_, value.raw().get_mpq_t(), MPFR_RNDN);
}

BigReal BigReal::parse(const std::string& text, unsigned digits) {
  BigReal out(digits);
  char* end = nullptr;
  mpfr_strtofr(out.value_, text.c_str(), &end, 10, MPFR_RNDN);
  if (text.empty() || end == nullptr || *end != '\0') {
    throw std::invalid_argument("BigReal::parse: not a decimal number: '" + text + "'");
  }
  return out;
}

BigReal BigReal::with_bits(mpfr_prec_t bits) {
  BigReal out(1U);
  mpfr_set_prec(out.value_, bits);
  mpfr_set_zero(out.value_, 1);
  return out;
}

BigReal::BigReal(const BigReal& other) {
  ensure_wide_exponent_range();
  mpfr_init2(value_, other.bits());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept {
  ensure_wide_exponent_range();
  mpfr_init2(value_, other.bits());
  mpfr_swap(value_, other.value_);
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.bits());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(value_); }

BigReal BigReal::with_digits(unsigned digits) const {
  BigReal out(digits);
  mpfr_set(out.value_, value_, MPFR_RNDN);
  return out;
}

long BigReal::exponent10() const {
  if (is_zero()) return -1000000000L;
  if (!is_finite()) return 1000000000L;
  // log10|x| = log2|x| * log10(2); exponent only needs to be approximate.
  const long e2 = mpfr_get_exp(value_);
  return static_cast<long>(std::floor(static_cast<double>(e2) * 0.30102999566398120)) + 1;
}

std::string BigReal::to_fixed_truncated(unsigned decimals) const {
  char* buffer = nullptr;
  if (mpfr_asprintf(&buffer, "%.*RZf", static_cast<int>(decimals), value_) < 0) {
    throw std::runtime_error("BigReal: formatting failed");
  }
  std::string out(buffer);
  mpfr_free_str(buffer);
  return out;
}

std::string BigReal::to_scientific(unsigned significant) const {
  char* buffer = nullptr;
  const int after = static_cast<int>(std::max(1U, significant) - 1);
  if (mpfr_asprintf(&buffer, "%.*RNe", after, value_) < 0) throw std::runtime_error("BigReal: formatting failed");
  std::string out(buffer);
  mpfr_free_str(buffer);
  return out;
}

void BigReal::widen_to(mpfr_prec_t bits) {
  if (bits > this->bits()) mpfr_prec_round(value_, bits, MPFR_RNDN);
}

BigReal BigReal::operator-() const {
  BigReal out(*this);
  mpfr_neg(out.value_, out.value_, MPFR_RNDN);
  return out;
}

BigReal& BigReal::operator+=(const BigReal& rhs) {
  widen_to(rhs.bits());
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator-=(const BigReal& rhs) {
  widen_to(rhs.bits());
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator*=(const BigReal& rhs) {
  widen_to(rhs.bits());
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator/=(const BigReal& rhs) {
  widen_to(rhs.bits());
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator/=(long rhs) {
  mpfr_div_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

std::partial_ordering operator<=>(const BigReal& a, const BigReal& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

namespace {

template <typename Fn>
BigReal unary(const BigReal& x, Fn fn) {
  BigReal out = BigReal::with_bits(x.bits());
  fn(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

}  // namespace

BigReal abs(const BigReal& x) { return unary(x, mpfr_abs); }
BigReal sqrt(const BigReal& x) { return unary(x, mpfr_sqrt); }
BigReal log(const BigReal& x) { return unary(x, mpfr_log); }
BigReal exp(const BigReal& x) { return unary(x, mpfr_exp); }
BigReal sinh(const BigReal& x) { return unary(x, mpfr_sinh); }
BigReal cosh(const BigReal& x) { return unary(x, mpfr_cosh); }
BigReal tanh(const BigReal& x) { return unary(x, mpfr_tanh); }
BigReal gamma(const BigReal& x) { return unary(x, mpfr_gamma); }
BigReal lngamma(const BigReal& x) { return unary(x, mpfr_lngamma); }
BigReal digamma(const BigReal& x) { return unary(x, mpfr_digamma); }

BigReal pow(const BigReal& base, const BigReal& exponent) {
  BigReal out = BigReal::with_bits(std::max(base.bits(), exponent.bits()));
  mpfr_pow(out.raw(), base.raw(), exponent.raw(), MPFR_RNDN);
  return out;
}

BigReal pow(const BigReal& base, long exponent) {
  BigReal out = BigReal::with_bits(base.bits());
  mpfr_pow_si(out.raw(), base.raw(), exponent, MPFR_RNDN);
  return out;
}

BigReal max(const BigReal& a, const BigReal& b) { return a < b ? b : a; }

BigReal pi(unsigned digits) {
  BigReal out(digits);
  mpfr_const_pi(out.raw(), MPFR_RNDN);
  return out;
}

BigReal euler_gamma(unsigned digits) {
  BigReal out(digits);
  mpfr_const_euler(out.raw(), MPFR_RNDN);
  return out;
}

BigReal ln2(unsigned digits) {
  BigReal out(digits);
  mpfr_const_log2(out.raw(), MPFR_RNDN);
  return out;
}

BigReal ten_pow_neg(unsigned k, unsigned digits) {
  BigReal out(10L, digits);
  mpfr_pow_si(out.raw(), out.raw(), -static_cast<long>(k), MPFR_RNDN);
  return out;
}

}  // namespace mellin::numerics
