#include <doctest.h>

#include "mellin/lfunc.hpp"
#include "mellin/quadrature.hpp"

using namespace mellin;
using namespace mellin::quadrature;
using numerics::ten_pow_neg;

namespace {

bool agree(const BigReal& a, const BigReal& b, unsigned digits) {
  return abs(a - b) < ten_pow_neg(digits, digits + 20);
}

}  // namespace

TEST_CASE("elementary half-line integrals") {
  const auto e = integrate_half_line([](const BigReal& x, mpfr_prec_t) { return numerics::exp(-x); });
  CHECK(e.converged);
  CHECK(agree(e.value, BigReal(1L, 40), 28));
  const auto c = integrate_half_line(
      [](const BigReal& x, mpfr_prec_t) { return BigReal(1L, 40) / (BigReal(1L, 40) + x * x); });
  CHECK(agree(c.value, numerics::pi(50) / 2L, 28));
  const auto g = integrate_half_line(
      [](const BigReal& x, mpfr_prec_t) { return numerics::exp(-x) / numerics::sqrt(x); }, {40, 12});
  CHECK(agree(g.value, numerics::sqrt(numerics::pi(60)), 38));
}

TEST_CASE("level doubling converges and the estimate covers the true error") {
  const auto r = quad_log_family(0, 3, 30);
  REQUIRE(r.converged);
  REQUIRE(r.level_values.size() >= 4);
  const std::size_t last = r.level_values.size() - 1;
  const BigReal final_step = abs(r.level_values[last] - r.level_values[last - 1]);
  CHECK(final_step <= r.error_estimate);
  // Differences shrink from level to level once resolved.
  for (std::size_t k = 3; k <= last; ++k) {
    CHECK(abs(r.level_values[k] - r.level_values[k - 1]) < abs(r.level_values[k - 1] - r.level_values[k - 2]));
  }
  const BigReal exact = numerics::eval_closed_form(closed_form::log_integral_odd_cosh(0, 1), 30);
  CHECK(abs(r.value - exact) <= r.error_estimate + ten_pow_neg(29, 40));
  CHECK(r.nodes_used > 0);
}

TEST_CASE("serial and parallel quadrature agree bit for bit") {
  const auto par = quad_phi(1, 3.5, 30, Execution::parallel);
  const auto ser = quad_phi(1, 3.5, 30, Execution::serial);
  CHECK(par.value == ser.value);
  CHECK(par.nodes_used == ser.nodes_used);
  const auto par2 = quad_sinh_over_z(2, 7, 40, Execution::parallel);
  const auto ser2 = quad_sinh_over_z(2, 7, 40, Execution::serial);
  CHECK(par2.value == ser2.value);
}

TEST_CASE("Phi decreases strictly in s") {
  for (int which : {1, 2}) {
    BigReal previous = quad_phi(which, 1.05, 25).value;
    for (double s : {1.2, 1.7, 2.0, 3.0, 4.5, 8.0, 16.0, 40.0}) {
      const BigReal v = quad_phi(which, s, 25).value;
      CHECK(v < previous);
      previous = v;
    }
  }
}

TEST_CASE("integrals that coincide") {
  CHECK(agree(quad_sinh_over_z(2, 6).value, quad_phi(1, 5.0).value, 27));
  CHECK(agree(quad_sinh_over_z(1, 3).value, quad_phi(2, 3.0).value, 27));
  const BigReal even01 = numerics::eval_closed_form(closed_form::log_integral_even_cosh(0, 1), 30);
  CHECK(agree(quad_log_family(0, 2).value, even01, 27));
  CHECK(agree(quad_spec({closed_form::Family::sinh_over_z, 1, 4, 0}).value, quad_phi(1, 3.0).value, 27));
}

TEST_CASE("constants C1 and C2") {
  CHECK(quad_c_constant(1).value.to_fixed_truncated(19) == "-0.2095053618026607653");
  CHECK(quad_c_constant(2).value.to_fixed_truncated(19) == "0.2059731205121406923");
  // The regular part is continuous at s = 1.
  CHECK(agree(quad_phi_regular_part(1, 1.0 + 1e-9).value, quad_c_constant(1).value, 8));
  // Away from the pole it matches the direct integral minus 1/(s-1).
  CHECK(agree(quad_phi_regular_part(2, 2.5).value, quad_phi(2, 2.5).value - BigReal(exact::Rational(2, 3), 40), 27));
}

TEST_CASE("domain checks") {
  CHECK_THROWS_AS(quad_log_family(1, 3), closed_form::DomainError);
  CHECK_THROWS_AS(quad_sinh_over_z(0, 5), closed_form::DomainError);
  CHECK_THROWS_AS(quad_phi(1, 1.0), closed_form::DomainError);
  CHECK_THROWS_AS(quad_phi(3, 2.0), std::invalid_argument);
  CHECK_THROWS(quad_phi(1, 2.0, kMaxDigits + 1));
  CHECK_THROWS_AS(quad_phi_regular_part(1, 0.5), closed_form::DomainError);
}
