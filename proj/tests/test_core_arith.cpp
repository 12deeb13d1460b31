#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"
#include "zetaforms/core_arith.hpp"
#include "zetaforms/errors.hpp"

using namespace zetaforms;

TEST_CASE("factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(6) == 720);
  CHECK(factorial(10) == 3628800);
  CHECK(factorial(25) == Integer("15511210043330985984000000"));
}

TEST_CASE("binomial") {
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(7, 3) == 35);
  CHECK(binomial(10, 5) == 252);
  CHECK_THROWS_AS(binomial(3, 4), DomainError);

  SUBCASE("Pascal's rule on a <= 30") {
    for (unsigned a = 1; a <= 30; ++a)
      for (unsigned b = 1; b <= a; ++b) CHECK(binomial(a, b) == binomial(a - 1, b - 1) + (b <= a - 1 ? binomial(a - 1, b) : Integer(0)));
  }
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(Rational(3), 0) == 1);
  CHECK(pochhammer(Rational(1, 2), 3) == Rational(15, 8));
  CHECK(pochhammer(Rational(2), 4) == 120);

  SUBCASE("(a)_{k+1} = (a)_k (a+k)") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
      const Rational a = testing::random_rational(rng, -10, 10);
      Rational running = pochhammer(a, 0);
      for (unsigned k = 0; k <= 50; ++k) {
        const Rational next = pochhammer(a, k + 1);
        CHECK(next == running * (a + k));
        running = next;
      }
    }
  }
}

TEST_CASE("lcm_upto") {
  CHECK(lcm_upto(1).value == 1);
  CHECK(lcm_upto(4).value == 12);
  CHECK(lcm_upto(6).value == 60);
  CHECK_THROWS_AS(lcm_upto(0), DomainError);

  for (unsigned n = 1; n < 60; ++n) {
    const LcmValue d = lcm_upto(n);
    CHECK(lcm_upto(n + 1).value % d.value == 0);
    for (unsigned k = 1; k <= n; ++k) CHECK(d.value % k == 0);
  }
}

TEST_CASE("bernoulli") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(2) == Rational(1, 6));
  CHECK(bernoulli(8) == Rational(-1, 30));
  CHECK(bernoulli(12) == Rational(-691, 2730));
  CHECK_THROWS_AS(bernoulli(3), DomainError);

  SUBCASE("defining recurrence with B_1 = -1/2") {
    auto B = [](unsigned j) {
      if (j == 1) return Rational(-1, 2);
      if (j % 2 == 1) return Rational(0);
      return bernoulli(j);
    };
    for (unsigned k = 1; k <= 20; ++k) {
      Rational sum{0};
      for (unsigned j = 0; j <= k; ++j) sum += Rational(binomial(k + 1, j)) * B(j);
      CHECK(sum == 0);
    }
  }
}

TEST_CASE("rationals stay reduced and print as p/q") {
  const Rational q = Rational(6, 8) + Rational(1, 4);
  CHECK(to_string(q) == "1");
  CHECK(to_string(Rational(-6, 8)) == "-3/4");
  CHECK(boost::multiprecision::denominator(Rational(10, -4)) > 0);
  CHECK(parse_rational(" -3/4 ") == Rational(-3, 4));
  CHECK(parse_rational("+7") == 7);
  CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
  CHECK_THROWS_AS(parse_rational("x"), DomainError);
}

TEST_CASE("power and log10_abs") {
  CHECK(power(Rational(2, 3), -3) == Rational(27, 8));
  CHECK(power(Rational(5), 0) == 1);
  CHECK(log10_abs(Rational(1000)) == doctest::Approx(3.0));
  CHECK(log10_abs(Rational(power(Integer(10), 400))) == doctest::Approx(400.0));
}
