#include <functional>
#include <thread>

#include <doctest.h>

#include "mellin/lfunc.hpp"

using namespace mellin::numerics;
using mellin::closed_form::BasisSymbol;
namespace exact = mellin::exact;

namespace {

bool agree(const BigReal& a, const BigReal& b, unsigned digits) { return abs(a - b) < ten_pow_neg(digits, digits + 20); }

}  // namespace

TEST_CASE("BigReal basics") {
  const BigReal x = BigReal::parse("1.5", 40);
  CHECK(x.to_double() == 1.5);
  CHECK((x * 2L).to_double() == 3.0);
  CHECK(BigReal(exact::Rational(1, 3), 30).to_fixed_truncated(5) == "0.33333");
  CHECK(BigReal(exact::Rational(-2, 3), 30).to_fixed_truncated(5) == "-0.66666");
  CHECK(x.with_digits(100).bits() > x.bits());
  CHECK_THROWS_AS(BigReal::parse("1.2.3", 30), std::invalid_argument);
  CHECK(BigReal(1L, 30) < x);
}

TEST_CASE("BigReal keeps a wide exponent range on worker threads") {
  BigReal tiny(30);
  std::thread worker([&] { tiny = exp(BigReal(-100000L, 30)); });
  worker.join();
  CHECK(tiny.sign() > 0);
  CHECK(tiny.is_finite());
}

TEST_CASE("classical values") {
  const unsigned d = 50;
  CHECK(agree(eta(2.0, d), pow(pi(d + 20), 2L) / 12L, d));
  CHECK(agree(eta(1.0, d), ln2(d + 20), d));
  CHECK(agree(beta(1.0, d), pi(d + 20) / 4L, d));
  CHECK(agree(beta(3.0, d), pow(pi(d + 20), 3L) / 32L, d));
  CHECK(agree(zeta_even(1, d), pow(pi(d + 20), 2L) / 6L, d));
  CHECK(agree(beta_odd(1, d), pow(pi(d + 20), 3L) / 32L, d));
  // eta'(1) = gamma ln 2 - ln^2 2 / 2
  const BigReal l2 = ln2(d + 20);
  CHECK(agree(eta_prime(1.0, d), euler_gamma(d + 20) * l2 - l2 * l2 / 2L, d));
}

TEST_CASE("beta'(1) and beta'(0) against Gamma(1/4)") {
  const unsigned d = 60, w = 80;
  const BigReal p = pi(w);
  const BigReal lg = lngamma(BigReal(exact::Rational(1, 4), w));
  const BigReal b1 = p / 4L * (euler_gamma(w) + ln2(w) * 2L + log(p) * 3L - lg * 4L);
  CHECK(agree(beta_prime(1.0, d), b1, d));
  CHECK(agree(beta_prime_em(1.5, d), beta_prime(1.5, d), d - 5));
  const BigReal b0 = lg * 2L - log(p * 2L * sqrt(BigReal(2L, w)));
  CHECK(agree(beta_prime_neg(0, d), b0, d));
  CHECK(agree(beta_prime_neg_alt(0, d), b0, d));
}

TEST_CASE("eta'(-1) against the Glaisher constant") {
  const unsigned d = 45, w = 70;
  const BigReal glaisher = BigReal::parse("1.28242712910062263687534256886979172776768892732500", w);
  const BigReal expected = log(glaisher) * 3L - BigReal(exact::Rational(1, 4), w) - ln2(w) / 3L;
  CHECK(agree(eta_prime_neg(0, d), expected, d));
}

TEST_CASE("both functional-equation arrangements agree") {
  for (unsigned i = 0; i <= 5; ++i) {
    CHECK(agree(eta_prime_neg(i, 40), eta_prime_neg_alt(i, 40), 35));
    CHECK(agree(beta_prime_neg(i, 40), beta_prime_neg_alt(i, 40), 35));
  }
}

TEST_CASE("alternating series and Euler-Maclaurin paths agree") {
  for (double s : {1.5, 2.0, 3.0, 4.0, 7.25}) {
    CAPTURE(s);
    CHECK(agree(zeta_prime(s, 40), zeta_prime_em(s, 40), 35));
    CHECK(agree(beta_prime(s, 40), beta_prime_em(s, 40), 35));
  }
  CHECK(zeta_prime(2.0, 30).to_fixed_truncated(24) == "-0.937548254315843753702574");
  CHECK(agree(zeta_prime(1.0001, 30), zeta_prime_em(1.0001, 30), 25));
}

TEST_CASE("precision monotonicity of every evaluator") {
  using Eval = std::function<BigReal(unsigned)>;
  const std::vector<std::pair<const char*, Eval>> evaluators = {
      {"eta", [](unsigned p) { return eta(2.5, p); }},
      {"eta_prime", [](unsigned p) { return eta_prime(3.0, p); }},
      {"beta", [](unsigned p) { return beta(2.5, p); }},
      {"beta_prime", [](unsigned p) { return beta_prime(1.0, p); }},
      {"zeta_prime", [](unsigned p) { return zeta_prime(2.0, p); }},
      {"zeta_prime_odd", [](unsigned p) { return zeta_prime(3.0, p); }},
      {"zeta_even", [](unsigned p) { return zeta_even(3, p); }},
      {"beta_odd", [](unsigned p) { return beta_odd(2, p); }},
      {"eta_prime_neg", [](unsigned p) { return eta_prime_neg(2, p); }},
      {"beta_prime_neg", [](unsigned p) { return beta_prime_neg(2, p); }},
      {"eta_prime_neg_alt", [](unsigned p) { return eta_prime_neg_alt(2, p); }},
      {"beta_prime_neg_alt", [](unsigned p) { return beta_prime_neg_alt(2, p); }},
      {"zeta_prime_em", [](unsigned p) { return zeta_prime_em(3.0, p); }},
      {"beta_prime_em", [](unsigned p) { return beta_prime_em(3.0, p); }},
      {"symbol_value", [](unsigned p) { return symbol_value(BasisSymbol::beta_ratio(2), p); }},
  };
  for (const auto& [name, f] : evaluators) {
    for (unsigned p : {20u, 50u, 100u}) {
      CAPTURE(name);
      CAPTURE(p);
      CHECK(abs(f(p) - f(p + 20)) < ten_pow_neg(p, p + 40));
    }
  }
}

TEST_CASE("argument checks") {
  CHECK_THROWS_AS(zeta_prime(1.0, 30), std::domain_error);
  CHECK_THROWS_AS(eta(0.5, 30), std::domain_error);
  CHECK_THROWS_AS(eta(2.0, kMaxDigits + 1), PrecisionError);
}

TEST_CASE("closed-form evaluation and the constant cache") {
  const auto before = constant_cache_stats();
  const mellin::closed_form::ClosedForm cf{{BasisSymbol::zeta_ratio(0), exact::Rational(-3)},
                                           {BasisSymbol::constant(), exact::Rational(-1, 2)},
                                           {BasisSymbol::log_pi(), exact::Rational(1, 2)},
                                           {BasisSymbol::log2(), exact::Rational(-2, 3)}};
  const BigReal first = eval_closed_form(cf, 35);
  const BigReal second = eval_closed_form(cf, 35);
  CHECK(first == second);
  const auto after = constant_cache_stats();
  CHECK(after.hits >= before.hits + 4);
  // -3 zeta'(2)/pi^2 - 1/2 + ln(pi)/2 - 2 ln(2)/3
  CHECK(first.to_fixed_truncated(20) == "-0.10475268090133038267");
}

TEST_CASE("Mellin bounds at s = 3 and s = 2") {
  const auto b3 = mellin_bounds(BigReal(3L, 30), 30);
  CHECK(agree(b3.phi1_lower, BigReal(exact::Rational(1, 4), 30), 28));
  CHECK(agree(b3.phi1_upper, BigReal(exact::Rational(1, 2), 30), 28));
  const auto b2 = mellin_bounds(BigReal(2L, 30), 30);
  CHECK(agree(b2.phi2_upper, pi(50) / 2L, 28));
  CHECK_THROWS(mellin_bounds(BigReal(1L, 30), 30));
}
