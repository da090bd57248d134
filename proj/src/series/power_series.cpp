#include <algorithm>
#include <stdexcept>

#include "mellin/series.hpp"

namespace mellin::series {

PowerSeries::PowerSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.emplace_back(0);
}

PowerSeries PowerSeries::one(std::size_t order) {
  std::vector<Rational> c(order + 1, Rational(0));
  c[0] = Rational(1);
  return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::truncate(std::size_t order) const {
  std::vector<Rational> c(coeffs_.begin(), coeffs_.begin() + static_cast<long>(std::min(order + 1, coeffs_.size())));
  return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::scale(const Rational& factor) const {
  std::vector<Rational> c = coeffs_;
  for (auto& v : c) v *= factor;
  return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::compose_x2() const {
  std::vector<Rational> c(2 * order() + 1, Rational(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) c[2 * k] = coeffs_[k];
  return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::reciprocal() const {
  const Rational& a0 = coeffs_.front();
  if (a0.is_zero()) throw std::domain_error("PowerSeries::reciprocal: zero constant term");
  const Rational inv0 = Rational(1) / a0;
  std::vector<Rational> r(coeffs_.size(), Rational(0));
  r[0] = inv0;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    Rational acc = 0;
    for (std::size_t i = 1; i <= k; ++i) {
      if (!coeffs_[i].is_zero()) acc += coeffs_[i] * r[k - i];
    }
    r[k] = -acc * inv0;
  }
  return PowerSeries(std::move(r));
}

PowerSeries PowerSeries::pow(unsigned exponent, Execution exec) const {
  PowerSeries result = one(order());
  PowerSeries base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = multiply(result, base, exec);
    exponent >>= 1U;
    if (exponent > 0) base = multiply(base, base, exec);
  }
  return result;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  std::vector<Rational> c(order + 1);
  for (std::size_t k = 0; k <= order; ++k) c[k] = a.coeffs_[k] + b.coeffs_[k];
  return PowerSeries(std::move(c));
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) { return a + b.scale(Rational(-1)); }

PowerSeries multiply(const PowerSeries& a, const PowerSeries& b, Execution exec) {
  const std::size_t order = std::min(a.order(), b.order());
  std::vector<Rational> c(order + 1);
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  for_each_index(order + 1, exec, [&](std::size_t k) {
    Rational acc = 0;
    for (std::size_t i = 0; i <= k; ++i) {
      if (!x[i].is_zero() && !y[k - i].is_zero()) acc += x[i] * y[k - i];
    }
    c[k] = std::move(acc);
  });
  return PowerSeries(std::move(c));
}

PowerSeries sinh_over_x(std::size_t order) {
  std::vector<Rational> c(order + 1, Rational(0));
  for (std::size_t k = 0; k <= order; k += 2) c[k] = Rational(Integer(1), exact::factorial(static_cast<unsigned>(k + 1)));
  return PowerSeries(std::move(c));
}

PowerSeries arctanh_over_x_in_x2(std::size_t order) {
  std::vector<Rational> c(order + 1);
  for (std::size_t k = 0; k <= order; ++k) c[k] = Rational(1, static_cast<long>(2 * k + 1));
  return PowerSeries(std::move(c));
}

PowerSeries inverse_sqrt_one_minus(std::size_t order) {
  std::vector<Rational> c(order + 1);
  for (std::size_t k = 0; k <= order; ++k) {
    c[k] = Rational(exact::binomial(static_cast<long>(2 * k), static_cast<long>(k)),
                    exact::pow2(static_cast<unsigned>(2 * k)));
  }
  return PowerSeries(std::move(c));
}

}  // namespace mellin::series
