#include <random>

#include <doctest.h>

#include "mellin/exact.hpp"
#include "oracles.hpp"

using namespace mellin::exact;

TEST_CASE("rational arithmetic stays normalized") {
  const Rational a(Integer(6), Integer(-4));
  CHECK(a.num() == -3);
  CHECK(a.den() == 2);
  CHECK(a + Rational(3, 2) == Rational(0));
  CHECK((Rational(1, 3) * Rational(3, 7)).to_string() == "1/7");
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
  CHECK(Rational(1, 2) < Rational(2, 3));
}

TEST_CASE("rational addition matches the explicit gcd path") {
  std::mt19937_64 rng(20261018);
  std::uniform_int_distribution<long> num(-1000000, 1000000);
  std::uniform_int_distribution<long> den(1, 1000000);
  for (int i = 0; i < 10000; ++i) {
    const Integer n1 = num(rng), d1 = den(rng), n2 = num(rng), d2 = den(rng);
    Integer n = n1 * d2 + n2 * d1;
    Integer d = d1 * d2;
    Integer g;
    mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    if (g != 0) {
      n /= g;
      d /= g;
    }
    const Rational sum = Rational(n1, d1) + Rational(n2, d2);
    REQUIRE(sum.num() == n);
    REQUIRE(sum.den() == (n == 0 ? Integer(1) : d));
  }
}

TEST_CASE("Bernoulli numbers agree with the defining recurrence") {
  const auto ref = oracles::bernoulli_by_recurrence(60);
  for (unsigned n = 0; n <= 60; ++n) CHECK(bernoulli(n) == ref[n]);
  CHECK(bernoulli(1) == Rational(-1, 2));
  CHECK(bernoulli(12) == Rational(-691, 2730));
  CHECK(bernoulli(100).den() == 33330);
}

TEST_CASE("Euler numbers") {
  CHECK(euler_number(0) == 1);
  CHECK(euler_number(2) == -1);
  CHECK(euler_number(4) == 5);
  CHECK(euler_number(6) == -61);
  CHECK(euler_number(10) == -50521);
  CHECK(euler_number(7) == 0);
}

TEST_CASE("Eulerian numbers of type A match permutation enumeration") {
  for (unsigned n = 1; n <= 8; ++n) {
    for (unsigned k = 0; k < n; ++k) CHECK(eulerian(EulerianKind::A, n, k) == oracles::brute_eulerian_a(n, k));
  }
  CHECK(eulerian(EulerianKind::A, 4, 4) == 0);
  CHECK(eulerian(EulerianKind::A, 4, -1) == 0);
}

TEST_CASE("Eulerian numbers of type B match signed-permutation enumeration") {
  for (unsigned n = 1; n <= 6; ++n) {
    for (unsigned k = 0; k <= n; ++k) CHECK(eulerian(EulerianKind::B, n, k) == oracles::brute_eulerian_b(n, k));
  }
  const auto row = eulerian_row(EulerianKind::B, 3);
  REQUIRE(row.size() == 4);
  CHECK(row[1] == 23);
}

TEST_CASE("binomials, factorials, harmonic numbers") {
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(factorial(20) == Integer("2432902008176640000"));
  CHECK(harmonic(4) == Rational(25, 12));
  CHECK(harmonic(0) == Rational(0));
  CHECK(pow2(70) == Integer("1180591620717411303424"));
}
