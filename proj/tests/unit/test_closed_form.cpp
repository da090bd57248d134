#include <doctest.h>

#include "mellin/closed_form.hpp"
#include "mellin/verify.hpp"

using namespace mellin::closed_form;
using mellin::exact::Rational;

TEST_CASE("log-odd (0,1) closed form and LaTeX") {
  const ClosedForm cf = log_integral_odd_cosh(0, 1);
  CHECK(cf.coeff(BasisSymbol::zeta_ratio(0)) == Rational(-3));
  CHECK(cf.coeff(BasisSymbol::constant()) == Rational(-1, 2));
  CHECK(cf.coeff(BasisSymbol::log_pi()) == Rational(1, 2));
  CHECK(cf.coeff(BasisSymbol::log2()) == Rational(-2, 3));
  CHECK(cf.to_latex() == "-3\\,\\frac{\\zeta'(2)}{\\pi^{2}} - \\frac{1}{2} + \\frac{1}{2}\\ln \\pi - \\frac{2}{3}\\ln 2");
}

TEST_CASE("every worked integral is reproduced exactly") {
  for (const auto& ex : mellin::verify::worked_integrals()) {
    CAPTURE(ex.label);
    CHECK(closed_form_for(ex.spec) == ex.expected);
  }
}

TEST_CASE("odd-argument tables in the negative-argument basis") {
  for (const auto& t : mellin::verify::worked_phi_tables()) {
    CAPTURE(t.which);
    CAPTURE(t.n);
    CHECK(phi_odd_closed_form(t.which, t.n) == t.expected);
  }
}

TEST_CASE("phi through sinh-over-z matches the published odd values") {
  CHECK(phi_odd_via_sinh(1, 1) == sinh_over_z_integral(1, 4));
  CHECK(phi_odd_via_sinh(2, 1) == sinh_over_z_integral(1, 3));
  CHECK(closed_form_for({Family::phi1, 0, 0, 5.0}) == sinh_over_z_integral(2, 6));
  CHECK_THROWS_AS(closed_form_for({Family::phi2, 0, 0, 4.0}), DomainError);
  CHECK_THROWS_AS(closed_form_for({Family::phi1, 0, 0, 1.0}), DomainError);
}

TEST_CASE("convergence violations name the constraint") {
  try {
    (void)log_integral_odd_cosh(3, 2);
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("2q+1 < 2n+1") != std::string::npos);
  }
  CHECK_THROWS_AS(log_integral_even_cosh(2, 2), DomainError);
  CHECK_THROWS_AS(sinh_over_z_integral(0, 4), DomainError);
  CHECK_THROWS_AS(sinh_over_z_integral(2, 4), DomainError);
  CHECK_THROWS_AS(log_integral_odd_cosh(0, 0), DomainError);
}

TEST_CASE("sinh-over-z forms never carry ln pi") {
  for (unsigned big_n = 3; big_n <= 16; ++big_n) {
    for (unsigned q = 1; 2 * q < big_n; ++q) {
      CHECK(sinh_over_z_integral(q, big_n).coeff(BasisSymbol::log_pi()).is_zero());
    }
  }
}

TEST_CASE("JSON round trip and canonical layout") {
  for (const auto& ex : mellin::verify::worked_integrals()) {
    const std::string text = ex.expected.to_json();
    CHECK(ClosedForm::from_json(text) == ex.expected);
    CHECK(ClosedForm::from_json(text).to_json() == text);
  }
  const ClosedForm single{{BasisSymbol::beta_ratio(1), Rational(16, 3)}};
  CHECK(single.to_json() == R"({"terms":[{"symbol":"beta_prime_ratio","p":1,"coeff":"16/3"}]})");
  CHECK_THROWS_AS(ClosedForm::from_json("{\"terms\": [{\"symbol\": \"nope\", \"coeff\": \"1\"}]}"),
                  std::invalid_argument);
  CHECK_THROWS_AS(ClosedForm::from_json("not json"), std::invalid_argument);
}

TEST_CASE("arithmetic drops cancelled terms") {
  const ClosedForm a = log_integral_odd_cosh(0, 1);
  CHECK((a - a).empty());
  CHECK((a + a) == a.scaled(Rational(2)));
  CHECK(a.scaled(Rational(0)).empty());
}

TEST_CASE("plain-text rendering") {
  CHECK(sinh_over_z_integral(1, 4).to_string() == "-2 * zeta'(2)/pi^2 + 30 * zeta'(4)/pi^4 + 5/18 - 4/45 * ln(2)");
  const ClosedForm c2{{BasisSymbol::beta_ratio(0), Rational(-4)}, {BasisSymbol::log_pi(), Rational(1)}};
  CHECK(c2.to_string() == "-4 * beta'(1)/pi + ln(pi)");
  CHECK(ClosedForm{}.to_string() == "0");
}

TEST_CASE("even-argument partial sums") {
  const auto p = mellin_even_partial(2, 1, 3);
  REQUIRE(p.size() == 3);
  CHECK(p[0] == Rational(1));
  CHECK(p[1] == Rational(-1, 6));
  const auto q = mellin_even_partial(1, 1, 3);
  CHECK(q[0] == Rational(1, 2));
  CHECK(q[1] == Rational(1, 48));
  CHECK_THROWS_AS(mellin_even_partial(3, 1, 3), DomainError);
}
