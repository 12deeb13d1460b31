#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/math/constants/constants.hpp>

#include "test_support.hpp"
#include "zetaforms/errors.hpp"
#include "zetaforms/numerics.hpp"

using namespace zetaforms;

namespace {

Real pi() { return boost::math::constants::pi<Real>(); }

struct FrozenR {
  Params params;
  int j;
  const char* value;  // 45 significant digits, from an independent mpmath summation
};

const std::vector<FrozenR> kFrozenR{
    {{1, 2, 2, 40}, 1, "0.206835208714868950675927999009209082509595258"},
    {{1, 3, 2, 40}, 1, "0.00158581042434287601571030931300055410082245957"},
    {{1, 4, 4, 40}, 1, "7.66774640800896424414460564608746512675084353e-9"},
    {{2, 5, 2, 40}, 1, "2.5955913640882098605885086015390817456851232"},
    {{2, 5, 2, 40}, 2, "2.25708953723643304170525052973085338009555864"},
    {{2, 5, 4, 40}, 1, "274.552877964714637531672926679856552638512841"},
    {{2, 5, 4, 40}, 2, "273.654178024552779430013905071733488535830972"},
    {{3, 8, 2, 40}, 1, "1739.94988333440003447516365379872644462258259"},
    {{3, 8, 2, 40}, 2, "1676.75207867479153222219524517379906003498027"},
    {{3, 8, 2, 40}, 3, "1361.75010269883231412712859662338063511007842"},
    {{2, 7, 2, 40}, 1, "0.00265072167809908567166348803214375046384028932"},
    {{2, 7, 2, 40}, 2, "0.00123657329091697953379595604224407658170339668"},
};

// Agreement with a 45-significant-digit reference.
bool matches(const PrecisionValue& v, const Real& reference) {
  return abs(v.value - reference) <= v.abs_error + abs(reference) * pow10(-43) + pow10(-60);
}

}  // namespace

TEST_CASE("hurwitz_zeta") {
  WorkingPrecision wp(100);
  const unsigned target = 50;
  SUBCASE("closed forms") {
    const PrecisionValue z2 = hurwitz_zeta(2, Rational(1), target);
    CHECK(z2.abs_error <= pow10(-50));
    CHECK(abs(z2.value - pi() * pi() / 6) <= z2.abs_error + pow10(-60));
    const PrecisionValue z4 = hurwitz_zeta(4, Rational(1), target);
    CHECK(abs(z4.value - boost::multiprecision::pow(pi(), 4) / 90) <= z4.abs_error + pow10(-60));
    const PrecisionValue half = hurwitz_zeta(2, Rational(1, 2), target);
    CHECK(abs(half.value - pi() * pi() / 2) <= half.abs_error + pow10(-60));
  }
  SUBCASE("odd zeta values") {
    const std::pair<int, const char*> cases[] = {
        {3, "1.2020569031595942853997381615114499907649862923405"},
        {5, "1.0369277551433699263313654864570341680570809195019"},
        {7, "1.0083492773819228268397975498497967595998635605652"},
    };
    for (const auto& [i, digits] : cases) {
      const PrecisionValue z = hurwitz_zeta(i, Rational(1), 45);
      CHECK(abs(z.value - testing::parse_real(digits)) <= z.abs_error + pow10(-48));
    }
  }
  SUBCASE("bracketed by partial sums") {
    // sum_{k<N} + int_N^inf <= zeta <= sum_{k<N} + (N+a)^-i + int_N^inf
    for (const auto& [i, alpha] : {std::pair{3, Rational(1, 3)}, std::pair{2, Rational(3, 4)}, std::pair{6, Rational(1, 5)}}) {
      const Real a = to_real(alpha);
      const int N = 200;
      Real partial(0);
      for (int k = 0; k < N; ++k) partial += boost::multiprecision::pow(k + a, -i);
      const Real integral = boost::multiprecision::pow(N + a, 1 - i) / (i - 1);
      const PrecisionValue z = hurwitz_zeta(i, alpha, 30);
      CHECK(z.value >= partial + integral - z.abs_error);
      CHECK(z.value <= partial + integral + boost::multiprecision::pow(N + a, -i) + z.abs_error);
    }
  }
  SUBCASE("zeta(i, 1/2) = (2^i - 1) zeta(i)") {
    const PrecisionValue z = hurwitz_zeta(5, Rational(1), 40);
    const PrecisionValue h = hurwitz_zeta(5, Rational(1, 2), 40);
    CHECK(abs(h.value - 31 * z.value) <= h.abs_error + 31 * z.abs_error);
  }
  CHECK_THROWS_AS(hurwitz_zeta(1, Rational(1), 20), DomainError);
  CHECK_THROWS_AS(hurwitz_zeta(2, Rational(0), 20), DomainError);
  CHECK_THROWS_AS(hurwitz_zeta(2, Rational(3, 2), 20), DomainError);
}

TEST_CASE("eval_r_direct against frozen values") {
  WorkingPrecision wp(100);
  for (const FrozenR& f : kFrozenR) {
    CAPTURE(f.params.D);
    CAPTURE(f.params.s);
    CAPTURE(f.params.n);
    CAPTURE(f.j);
    const PrecisionValue r = eval_r_direct(f.params, f.j, 40);
    CHECK(r.abs_error <= pow10(-40));
    CHECK(matches(r, testing::parse_real(f.value)));
  }
}

TEST_CASE("eval_r_direct, n = 0") {
  WorkingPrecision wp(80);
  const PrecisionValue r = eval_r_direct({1, 2, 0, 40}, 1, 30);
  CHECK(abs(r.value - (pi() * pi() / 6 - 1)) <= r.abs_error + pow10(-40));
  const PrecisionValue h = eval_r_direct({2, 5, 0, 40}, 1, 30);
  const PrecisionValue z = hurwitz_zeta(5, Rational(1, 2), 40);
  CHECK(abs(h.value - (z.value - 32)) <= h.abs_error + z.abs_error);
}

TEST_CASE("eval_r_direct against a plain summation") {
  WorkingPrecision wp(40);
  const Params p{2, 5, 2, 40};
  const auto R = build_R(p);
  for (int j = 1; j <= 2; ++j) {
    const int N = 3000;
    Real sum(0);
    for (int m = 1; m < N; ++m) sum += to_real(eval_R_exact(R, Rational(m) + Rational(j, 2)));
    // R(t) ~ 4096 t^-5 far out; the Euler-Maclaurin estimate of what remains is good to ~1e-17 here.
    const Real start = Real(N) + Real(j) / 2;
    sum += 4096 / (4 * boost::multiprecision::pow(start - Real(0.5), 4));
    const PrecisionValue r = eval_r_direct(p, j, 30);
    CHECK(abs(r.value - sum) <= Real("1e-9"));
  }
}

TEST_CASE("eval_form_numeric equals the direct sum") {
  WorkingPrecision wp(80);
  for (const Params& p : {Params{1, 2, 2, 40}, Params{2, 5, 2, 40}, Params{3, 8, 2, 40}}) {
    for (const auto& form : build_forms(p)) {
      const PrecisionValue lhs = eval_r_direct(p, form.j, 35);
      const PrecisionValue rhs = eval_form_numeric(form, 35);
      CHECK(abs(lhs.value - rhs.value) <= lhs.abs_error + rhs.abs_error);
      CHECK(rhs.abs_error <= pow10(-35));
    }
  }
}

TEST_CASE("beta_factor") {
  CHECK(beta_factor({1, 2, 2, 40}, 0) == Rational(1, 30));
  CHECK(beta_factor({1, 2, 0, 40}, 4) == Rational(1, 5));
  SUBCASE("binomial expansion of (1 - x^D)^n") {
    for (const Params& p : {Params{1, 2, 2, 40}, Params{2, 5, 4, 40}, Params{3, 8, 2, 40}}) {
      for (unsigned k = 0; k < 12; ++k) {
        Rational expected{0};
        for (int i = 0; i <= p.n; ++i) {
          const Rational term = Rational(binomial(static_cast<unsigned>(p.n), static_cast<unsigned>(i))) /
                                Rational(p.D * p.n + static_cast<int>(k) + 1 + p.D * i);
          expected += (i % 2 == 0) ? term : -term;
        }
        CHECK(beta_factor(p, k) == expected);
      }
    }
  }
}

TEST_CASE("root_of_unity") {
  WorkingPrecision wp(60);
  CHECK(root_of_unity(1, 1, 40).exact);
  const RootOfUnity minus = root_of_unity(2, 1, 40);
  CHECK(minus.exact);
  CHECK(minus.value.value.re == -1);
  CHECK(root_of_unity(2, 2, 40).value.value.re == 1);
  for (int D : {3, 4, 6, 7}) {
    const RootOfUnity xi = root_of_unity(D, 1, 40);
    CHECK_FALSE(xi.exact);
    CHECK(abs(power(xi.value.value, static_cast<unsigned>(D)) - Complex(Real(1))) <= pow10(-38));
    CHECK(root_of_unity(D, -1, 40).m == D - 1);
  }
  CHECK_THROWS_AS(root_of_unity(0, 1, 40), DomainError);
}

TEST_CASE("eval_r_star") {
  WorkingPrecision wp(60);
  SUBCASE("n = 0, D = 1 reduces to zeta(s)") {
    const StarIntegralValue z2 = eval_r_star({1, 2, 0, 40}, 1, 4);
    CHECK(abs(z2.value.value - Complex(pi() * pi() / 6)) <= z2.value.abs_error);
    CHECK(z2.value.abs_error <= Real("1e-4"));
    const StarIntegralValue z3 = eval_r_star({1, 3, 0, 40}, 1, 12);
    CHECK(abs(z3.value.value - Complex(testing::parse_real("1.2020569031595942853997381615114499907649862923405"))) <=
          z3.value.abs_error);
  }
  SUBCASE("tail bound shrinks below the target") {
    const StarIntegralValue v = eval_r_star({2, 5, 2, 40}, 1, 10);
    CHECK(v.tail_bound <= Real("1e-10"));
    CHECK(v.terms_used <= 100000);
  }
  SUBCASE("a tighter target stays inside the looser bound") {
    const StarIntegralValue loose = eval_r_star({2, 5, 2, 40}, 2, 8);
    const StarIntegralValue tight = eval_r_star({2, 5, 2, 40}, 2, 16);
    CHECK(tight.terms_used >= loose.terms_used);
    CHECK(abs(tight.value.value - loose.value.value) <= loose.value.abs_error + tight.value.abs_error);
  }
  SUBCASE("budget exhaustion is reported") {
    CHECK_THROWS_AS(eval_r_star({1, 2, 0, 40}, 1, 30, 1000), PrecisionError);
  }
  CHECK_THROWS_AS(eval_r_star({2, 5, 2, 40}, 3, 10), DomainError);
}

TEST_CASE("verify_theorem1") {
  WorkingPrecision wp(60);
  const std::vector<std::pair<Params, unsigned>> cases{
      {{1, 3, 2, 40}, 11}, {{2, 5, 2, 40}, 10}, {{3, 8, 2, 40}, 9}};
  for (const auto& [p, digits] : cases) {
    for (int j = 1; j <= p.D; ++j) {
      CAPTURE(p.D);
      CAPTURE(j);
      const Theorem1Check check = verify_theorem1(p, j, digits);
      CHECK(check.pass);
      CHECK(check.stars.size() == static_cast<std::size_t>(p.D));
      CHECK(check.residual <= pow10(-static_cast<int>(digits) + 2) * (1 + abs(check.direct.value)));
    }
  }
  try {
    (void)verify_theorem1({1, 2, 0, 40}, 1, 10);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.constraint() == "n >= 1");
  }
}

TEST_CASE("roots_filter_check") {
  WorkingPrecision wp(60);
  for (const Rational& x : {Rational(0), Rational(1, 2), Rational(-1, 3), Rational(9, 20)}) {
    for (const Params& p : {Params{1, 2, 2, 40}, Params{3, 8, 2, 40}, Params{4, 11, 2, 40}}) {
      for (int j = 1; j <= p.D; ++j) {
        const FilterCheck check = roots_filter_check(p, j, x, 25);
        CHECK(check.pass);
        CHECK(check.residual <= Real("1e-20") * (1 + abs(check.lhs.value)));
      }
    }
  }
  const FilterCheck at_zero = roots_filter_check({3, 8, 2, 40}, 2, Rational(0), 25);
  CHECK(at_zero.lhs.value == 0);
  CHECK_THROWS_AS(roots_filter_check({1, 2, 2, 40}, 1, Rational(20, 9), 25), DomainError);
  CHECK_THROWS_AS(roots_filter_check({1, 2, 2, 40}, 2, Rational(1, 2), 25), DomainError);
}

TEST_CASE("pfq_cross_check") {
  WorkingPrecision wp(60);
  SUBCASE("parameter lists") {
    const PfqCheck check = pfq_cross_check({2, 5, 2, 40}, 1, 16);
    const std::vector<Rational> upper{Rational(7), Rational(15, 2), Rational(5, 2), Rational(5, 2), Rational(5, 2),
                                      Rational(5, 2), Rational(5, 2), Rational(5, 2)};
    const std::vector<Rational> lower{Rational(1, 2), Rational(11, 2), Rational(11, 2), Rational(11, 2),
                                      Rational(11, 2), Rational(11, 2), Rational(11, 2)};
    CHECK(check.upper == upper);
    CHECK(check.lower == lower);
    CHECK(check.pass);
    CHECK(check.residual <= Real("1e-15"));
  }
  SUBCASE("n = 0 is zeta(2)") {
    const PfqCheck check = pfq_cross_check({1, 2, 0, 40}, 1, 4);
    CHECK(check.prefactor == 1);
    CHECK(abs(check.value.value - pi() * pi() / 6) <= check.value.abs_error);
    CHECK(check.pass);
  }
  SUBCASE("grid") {
    for (const Params& p : {Params{1, 3, 2, 40}, Params{3, 8, 2, 40}, Params{2, 7, 2, 40}}) {
      for (int j = 1; j <= p.D; ++j) CHECK(pfq_cross_check(p, j, 16).pass);
    }
  }
}

TEST_CASE("growth_report") {
  WorkingPrecision wp(60);
  const std::vector<Params> list{{2, 5, 2, 40}, {2, 5, 4, 40}, {2, 5, 6, 40}};
  const auto rows = growth_report(list, 1, 20);
  REQUIRE(rows.size() == 3);
  for (const GrowthRow& row : rows) {
    CHECK(row.positive);
    CHECK(abs(boost::multiprecision::pow(row.nth_root, row.n) - row.r.value) <= row.r.value * Real("1e-30"));
  }
  CHECK(abs(rows[1].r.value - testing::parse_real("274.552877964714637531672926679856552638512841")) <= Real("1e-18"));
  const std::vector<Params> bad{{1, 2, 0, 40}};
  CHECK_THROWS_AS(growth_report(bad, 1, 20), ValidationError);
}
