#pragma once

#include <span>
#include <vector>

#include "zetaforms/core_arith.hpp"
#include "zetaforms/precision.hpp"
#include "zetaforms/series.hpp"

namespace zetaforms {

/// The triple (D, s, n) plus the decimal target precision.
struct Params {
  int D = 1;
  int s = 2;
  int n = 2;
  int precision_digits = 40;

  bool operator==(const Params&) const = default;
};

struct ParamPolicy {
  // Odd n is only meaningful for D = 2 (the 7 r_{n,2} - r_{n,1} forms).
  bool allow_odd_n = false;
};

// Throws ValidationError naming the first violated constraint.
void validate(const Params& params, ParamPolicy policy = {});

// kappa = (n+1)(s+1) - (3Dn+1): power-law decay rate of the summed series.
int decay_exponent(const Params& params);

// Sign sigma in R(-n-t) = sigma R(t); equals (-1)^s for even n.
int reflection_sign(const Params& params);

/**
 * R_n(t) = D^{3Dn} n!^{s+1-3D} prod_{l=0}^{3Dn} (t - n + l/D) / prod_{l=0}^{n} (t + l)^{s+1},
 * kept in factored form.
 *
 * Numerator roots are n - l/D for l = 0..3Dn (so they fill [-2n, n] with step
 * 1/D); poles are 0, -1, ..., -n, each of order s+1. The function is never
 * expanded into monomials.
 */
struct RationalFunctionRep {
  Params params;
  Rational prefactor;
  std::vector<Rational> numerator_roots;
  int pole_count = 0;  // n + 1
  int pole_order = 0;  // s + 1

  // n = 0: only usable as a closed-form test case.
  bool degenerate() const noexcept { return params.n == 0; }
  int numerator_degree() const noexcept { return static_cast<int>(numerator_roots.size()); }
  int denominator_degree() const noexcept { return pole_count * pole_order; }
};

RationalFunctionRep build_R(const Params& params, ParamPolicy policy = {});

// Throws PoleError at t in {0, -1, ..., -n}.
Rational eval_R_exact(const RationalFunctionRep& R, const Rational& t);

// Evaluates at an inexact point, returning a value whose error bound is at
// most 10^-precision_digits. Throws ConditioningError when t is too close to a
// pole for that to be achievable.
PrecisionValue eval_R_float(const RationalFunctionRep& R, const PrecisionValue& t);

// True iff R(-n-t) == sigma R(t) exactly at every sample (sigma = (-1)^s for even n).
bool check_symmetry(const RationalFunctionRep& R, std::span<const Rational> sample_points);

// Taylor coefficients of h -> R(t0 + h), h^0 .. h^(order-1), at the current
// working precision. t0 must not be a pole.
TruncatedSeries<Real> taylor_expansion(const RationalFunctionRep& R, const Real& t0, std::size_t order);

}  // namespace zetaforms
