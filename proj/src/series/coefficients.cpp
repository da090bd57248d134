#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

#include "mellin/series.hpp"

namespace mellin::series {
namespace {

// (x / sinh x)^e up to x^max_k, built in y = x^2 then spread back to x.
std::vector<Rational> inverse_sinh_power(unsigned e, std::size_t max_k) {
  const std::size_t half = max_k / 2;
  std::vector<Rational> in_y(half + 1);
  for (std::size_t k = 0; k <= half; ++k) {
    in_y[k] = Rational(Integer(1), exact::factorial(static_cast<unsigned>(2 * k + 1)));
  }
  PowerSeries base = PowerSeries(std::move(in_y)).reciprocal();
  std::vector<Rational> out = base.pow(e).compose_x2().coeffs();
  out.resize(max_k + 1, Rational(0));
  return out;
}

// Per-exponent coefficient rows, regrown (doubling) when a deeper index is asked for.
class CoefficientCache {
 public:
  Rational get(unsigned exponent, std::size_t k) {
    {
      std::shared_lock lock(mutex_);
      auto it = rows_.find(exponent);
      if (it != rows_.end() && k < it->second.size()) return it->second[k];
    }
    std::unique_lock lock(mutex_);
    auto& row = rows_[exponent];
    if (k >= row.size()) {
      const std::size_t target = std::max<std::size_t>({k, 2 * row.size(), 32});
      row = inverse_sinh_power(exponent, target);
    }
    return row[k];
  }

 private:
  std::shared_mutex mutex_;
  std::map<unsigned, std::vector<Rational>> rows_;
};

CoefficientCache& cache() {
  static CoefficientCache instance;
  return instance;
}

}  // namespace

std::vector<Rational> c_coeffs(unsigned n, std::size_t max_k) { return inverse_sinh_power(2 * n + 1, max_k); }

std::vector<Rational> d_coeffs(unsigned n, std::size_t max_k) { return inverse_sinh_power(2 * n, max_k); }

Rational c_coeff(long k, unsigned n) {
  if (k < 0) return Rational(0);
  return cache().get(2 * n + 1, static_cast<std::size_t>(k));
}

Rational d_coeff(long k, unsigned n) {
  if (k < 0) return Rational(0);
  return cache().get(2 * n, static_cast<std::size_t>(k));
}

GHTable::GHTable(unsigned n_max) : n_max_(n_max), g_(n_max + 1), h_(n_max + 1) {
  g_[0] = {Integer(1)};
  h_[0] = {Integer(1)};
  for (unsigned n = 1; n <= n_max; ++n) {
    g_[n].assign(n + 1, Integer(0));
    h_[n].assign(n + 1, Integer(0));
    const Integer sq_g = Integer(n) * n;
    const Integer sq_h = Integer(2 * n - 1) * (2 * n - 1);
    for (unsigned k = 0; k <= n; ++k) {
      const Integer g_prev_diag = k >= 1 ? g_[n - 1][k - 1] : Integer(0);
      const Integer h_prev_diag = k >= 1 ? h_[n - 1][k - 1] : Integer(0);
      const Integer g_prev = k < n ? g_[n - 1][k] : Integer(0);
      const Integer h_prev = k < n ? h_[n - 1][k] : Integer(0);
      g_[n][k] = g_prev_diag - sq_g * g_prev;
      h_[n][k] = h_prev_diag - sq_h * h_prev;
    }
  }
}

Integer GHTable::at(const std::vector<std::vector<Integer>>& t, long k, long n) const {
  if (n < 0 || k < 0 || n > static_cast<long>(n_max_) || k > n) return 0;
  return t[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

GHTable gh_table(unsigned n_max) { return GHTable(n_max); }

Rational omega(unsigned q, unsigned p) {
  Integer acc = 0;
  for (unsigned k = 0; k <= q; ++k) {
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), 2 * q + 1 - 2 * k, 2 * p);
    acc += exact::binomial(2 * q + 1, k) * power;
  }
  return Rational(acc, exact::pow2(2 * q));
}

ReciprocalCoeffs reciprocal_coeffs(std::size_t n) {
  if (n < 1) throw std::domain_error("reciprocal_coeffs: order must be >= 1");
  const PowerSeries p = arctanh_over_x_in_x2(n).reciprocal();
  const PowerSeries q = multiply(p, inverse_sqrt_one_minus(n));
  return ReciprocalCoeffs{p.coeffs(), q.coeffs()};
}

Rational arctanh_sq_coeff(unsigned n) {
  if (n == 0) return Rational(0);
  Rational acc = 0;
  for (unsigned k = 1; k <= n; ++k) acc += Rational(1, static_cast<long>(2 * k - 1));
  return acc / Rational(static_cast<long>(n));
}

}  // namespace mellin::series
