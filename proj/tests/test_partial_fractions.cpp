#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"
#include "zetaforms/errors.hpp"
#include "zetaforms/partial_fractions.hpp"

using namespace zetaforms;

namespace {

const std::vector<Params> kGrid{{1, 2, 2, 40}, {1, 3, 2, 40}, {1, 4, 4, 40}, {2, 5, 2, 40},
                                {2, 5, 4, 40}, {3, 8, 2, 40}, {2, 7, 2, 40}, {1, 2, 6, 40}};

bool is_pole(const Params& p, const Rational& t) { return is_integer(t) && t <= 0 && t >= -p.n; }

}  // namespace

TEST_CASE("table for D=1 s=2 n=2") {
  const PartialFractionTable A = decompose(build_R({1, 2, 2, 40}));
  REQUIRE(A.pole_count() == 3);
  REQUIRE(A.max_order() == 3);
  const Rational expected[3][3] = {
      {Rational(-47, 2), Rational(6), Rational(0)},
      {Rational(0), Rational(36), Rational(0)},
      {Rational(47, 2), Rational(6), Rational(0)},
  };
  for (int l = 0; l < 3; ++l)
    for (int i = 1; i <= 3; ++i) CHECK(A(l, i) == expected[l][i - 1]);
  CHECK(A.column_sum(1) == 0);
  CHECK(A.column_sum(2) == 48);
  CHECK(A.column_sum(3) == 0);
}

TEST_CASE("n = 0 collapses to a single pure power") {
  for (const Params& p : {Params{1, 2, 0, 40}, Params{2, 5, 0, 40}, Params{3, 9, 0, 40}}) {
    const PartialFractionTable A = decompose(build_R(p));
    REQUIRE(A.pole_count() == 1);
    for (int i = 1; i <= p.s + 1; ++i) CHECK(A(0, i) == (i == p.s ? 1 : 0));
  }
}

TEST_CASE("reconstruction reproduces R exactly") {
  std::mt19937_64 rng(19);
  for (const Params& p : kGrid) {
    const auto R = build_R(p);
    const PartialFractionTable A = decompose(R);
    for (int trial = 0; trial < 25; ++trial) {
      Rational t = testing::random_rational(rng, -3 * p.n - 3, 3 * p.n + 5);
      if (is_pole(p, t)) t += Rational(1, 2);
      CHECK(reconstruct_eval(A, t) == eval_R_exact(R, t));
    }
    CHECK_THROWS_AS(reconstruct_eval(A, Rational(-p.n)), PoleError);
  }
}

TEST_CASE("parity profile") {
  SUBCASE("even s keeps even i") {
    const auto profile = parity_profile(decompose(build_R({1, 2, 2, 40})));
    CHECK(profile.at(1));
    CHECK_FALSE(profile.at(2));
    CHECK(profile.at(3));
  }
  SUBCASE("odd s keeps odd i") {
    const auto profile = parity_profile(decompose(build_R({2, 5, 2, 40})));
    for (int i = 1; i <= 6; ++i) {
      if (i == 1 || i % 2 == 0) CHECK(profile.at(i));
    }
    CHECK_FALSE(profile.at(3));
    CHECK_FALSE(profile.at(5));
  }
  SUBCASE("whole grid") {
    for (const Params& p : kGrid) {
      const auto profile = parity_profile(decompose(build_R(p)));
      CHECK(profile.at(1));
      for (int i = 2; i <= p.s + 1; ++i) {
        if ((i - p.s) % 2 != 0) CHECK(profile.at(i));
      }
    }
  }
}

TEST_CASE("reflection relation between mirrored poles") {
  for (const Params& p : kGrid) CHECK(reflection_relation_holds(decompose(build_R(p))));
  CHECK(reflection_relation_holds(decompose(build_R({2, 5, 3, 40}, {.allow_odd_n = true}))));

  const PartialFractionTable A = decompose(build_R({1, 3, 2, 40}));
  for (int l = 0; l <= 2; ++l)
    for (int i = 1; i <= 4; ++i) CHECK(A(2 - l, i) == -(i % 2 == 0 ? 1 : -1) * A(l, i));
}

TEST_CASE("json rows") {
  const auto json = to_json(decompose(build_R({1, 2, 2, 40})));
  REQUIRE(json.is_array());
  CHECK(json.size() == 9);
  bool found = false;
  for (const auto& row : json) {
    if (row.at("l") == 0 && row.at("i") == 1) {
      CHECK(row.at("A") == "-47/2");
      found = true;
    }
  }
  CHECK(found);
}
