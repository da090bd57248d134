#include <doctest.h>

#include "mellin/series.hpp"
#include "oracles.hpp"

using namespace mellin;
using namespace mellin::series;

namespace {

PowerSeries x_over_sinh(std::size_t order) { return sinh_over_x(order).reciprocal(); }

}  // namespace

TEST_CASE("power by squaring equals repeated multiplication") {
  for (std::size_t order : {6u, 24u}) {
    const PowerSeries base = x_over_sinh(order);
    for (unsigned e = 0; e <= 12; ++e) {
      CHECK(base.pow(e, Execution::serial) == oracles::repeated_power(base, e));
      CHECK(base.pow(e, Execution::parallel) == base.pow(e, Execution::serial));
    }
  }
}

TEST_CASE("c and d coefficients come from odd and even powers of x/sinh x") {
  for (unsigned n = 0; n <= 12; ++n) {
    const auto odd = oracles::repeated_power(x_over_sinh(24), 2 * n + 1);
    const auto even = oracles::repeated_power(x_over_sinh(24), 2 * n);
    const auto c = c_coeffs(n, 24);
    const auto d = d_coeffs(n, 24);
    for (std::size_t k = 0; k <= 24; ++k) {
      CHECK(c[k] == odd.coeff(k));
      CHECK(d[k] == even.coeff(k));
      CHECK(c_coeff(static_cast<long>(k), n) == c[k]);
      CHECK(d_coeff(static_cast<long>(k), n) == d[k]);
    }
  }
  CHECK(c_coeff(-2, 3) == Rational(0));
  CHECK(c_coeff(2, 0) == Rational(-1, 6));
}

TEST_CASE("serial and parallel multiplication agree exactly") {
  const PowerSeries a = x_over_sinh(40);
  const PowerSeries b = inverse_sqrt_one_minus(40);
  CHECK(multiply(a, b, Execution::parallel) == multiply(a, b, Execution::serial));
}

TEST_CASE("reciprocal and composition") {
  const PowerSeries f = sinh_over_x(10);
  CHECK(multiply(f, f.reciprocal()) == PowerSeries::one(10));
  CHECK_THROWS_AS(PowerSeries({Rational(0), Rational(1)}).reciprocal(), std::domain_error);
  const PowerSeries g({Rational(1), Rational(2)});
  const PowerSeries h = g.compose_x2();
  CHECK(h.order() == 2);
  CHECK(h.coeff(1) == Rational(0));
  CHECK(h.coeff(2) == Rational(2));
}

TEST_CASE("secant series reproduces the Euler numbers") {
  const PowerSeries sech = oracles::cosh_series(30).reciprocal();
  for (unsigned k = 0; k <= 30; ++k) {
    CHECK(sech.coeff(k) * Rational(exact::factorial(k)) == Rational(exact::euler_number(k)));
  }
}

TEST_CASE("g and h tables expand P_n and 4^n Q_n") {
  const GHTable table(10);
  for (unsigned n = 0; n <= 10; ++n) {
    std::vector<long> roots, odd_roots;
    for (unsigned i = 1; i <= n; ++i) {
      roots.push_back(i);
      odd_roots.push_back(2 * i - 1);
    }
    const auto p = oracles::expand_even_product(roots, 1);
    const auto q = oracles::expand_even_product(odd_roots, 0);
    for (unsigned k = 0; k <= n; ++k) {
      CHECK(table.g(k, n) == p[2 * k + 1]);
      CHECK(table.h(k, n) == q[2 * k]);
    }
    CHECK(table.g(n + 1, n) == 0);
    CHECK(table.g(-1, n) == 0);
  }
}

TEST_CASE("Omega equals scaled Taylor coefficients of cosh^{2q+1}") {
  for (unsigned q = 0; q <= 6; ++q) {
    const auto power = oracles::repeated_power(oracles::cosh_series(20), 2 * q + 1);
    for (unsigned p = 0; p <= 10; ++p) {
      CHECK(omega(q, p) == power.coeff(2 * p) * Rational(exact::factorial(2 * p)));
    }
  }
}

TEST_CASE("reciprocal artanh coefficients") {
  const auto rc = reciprocal_coeffs(6);
  CHECK(rc.p[0] == Rational(1));
  CHECK(rc.p[1] == Rational(-1, 3));
  CHECK(rc.p[2] == Rational(-4, 45));
  CHECK(rc.q[0] == Rational(1));
  CHECK(rc.q[1] == Rational(1, 6));
  CHECK_THROWS_AS(reciprocal_coeffs(0), std::domain_error);
  // artanh^2 x = x^2 + 2/3 x^4 + 23/45 x^6 + ...
  CHECK(arctanh_sq_coeff(1) == Rational(1));
  CHECK(arctanh_sq_coeff(2) == Rational(2, 3));
  CHECK(arctanh_sq_coeff(3) == Rational(23, 45));
}
