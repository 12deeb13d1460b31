#pragma once

#include <span>
#include <vector>

#include "zetaforms/linear_forms.hpp"
#include "zetaforms/precision.hpp"
#include "zetaforms/rational_function.hpp"

namespace zetaforms {

// All routines here run at their own working precision (see WorkingPrecision)
// and return values with an absolute error bound <= 10^-target_digits. The
// tail bounds of the power-law series are heuristic (envelope plus cutoff
// doubling); everything else is tracked as a running absolute bound.

/// zeta(i, alpha) = sum_{k>=0} (k+alpha)^-i by Euler-Maclaurin, i >= 2, 0 < alpha <= 1.
PrecisionValue hurwitz_zeta(int i, const Rational& alpha, unsigned target_digits);

/// r_{n,j} = sum_{m>=1} R_n(m + j/D).
///
/// The head is summed exactly in rationals. The tail from m = M is
/// integral + f(M)/2 - sum_k B_2k/(2k) c_{2k-1}, where the integral comes from
/// the expansion of R at infinity (remainder bounded by a majorant with
/// positive coefficients) and c_q are Taylor coefficients of R at M + j/D.
PrecisionValue eval_r_direct(const Params& params, int j, unsigned target_digits, ParamPolicy policy = {});

/// a0 + sum_i a_i zeta(i, j/D).
PrecisionValue eval_form_numeric(const HurwitzLinearForm& form, unsigned target_digits);

/// I_k = int_0^1 x^{Dn+k} (1-x^D)^n dx = n! D^n / prod_{r=0}^{n} (Dn+k+1+rD).
Rational beta_factor(const Params& params, unsigned k);

/// Primitive D-th root of unity raised to m: exp(2 pi i m / D).
struct RootOfUnity {
  int D = 1;
  int m = 0;
  ComplexValue value;
  bool exact = false;  // D in {1, 2}: value is exactly +-1
};

RootOfUnity root_of_unity(int D, int m, unsigned digits);

struct StarIntegralValue {
  Params params;
  int m = 1;
  ComplexValue value;
  long terms_used = 0;
  Real tail_bound;
};

/// r*_{n,m} = sum_{k>=0} binom(3Dn+1+k, k) xi^{m(k+1)} I_k^{s+1}.
StarIntegralValue eval_r_star(const Params& params, int m, unsigned target_digits, long term_budget = 1L << 21);

struct Theorem1Check {
  PrecisionValue direct;
  ComplexValue reconstructed;  // D^{s-1} (3Dn+1)! / n!^{3D} sum_m xi^{-mj} r*_{n,m}
  std::vector<StarIntegralValue> stars;
  Real residual;
  Real imaginary;
  Real combined_error;
  bool pass = false;
};

// Requires n >= 1.
Theorem1Check verify_theorem1(const Params& params, int j, unsigned target_digits);

struct FilterCheck {
  PrecisionValue lhs;   // sum over l = j-1 (mod D) of (3Dn+2)_l / l! x^l
  ComplexValue rhs;     // (1/D) sum_m xi^{-m(j-1)} / (1 - xi^m x)^{3Dn+2}
  long terms_used = 0;
  Real residual;
  Real combined_error;
  bool pass = false;
};

FilterCheck roots_filter_check(const Params& params, int j, const Rational& x, unsigned target_digits);

struct PfqCheck {
  std::vector<Rational> upper;  // s + D + 1 parameters
  std::vector<Rational> lower;  // s + D parameters (the k! is implicit)
  Rational prefactor;
  PrecisionValue series;        // pFq(...|1)
  PrecisionValue value;         // prefactor * series
  PrecisionValue reference;     // sum_{m>=n} R(m + j/D)
  long terms_used = 0;
  Real residual;
  Real combined_error;
  bool pass = false;
};

PfqCheck pfq_cross_check(const Params& params, int j, unsigned target_digits);

struct GrowthRow {
  int n = 0;
  PrecisionValue r;
  Real nth_root;
  bool positive = false;  // value - error > 0
};

std::vector<GrowthRow> growth_report(std::span<const Params> params_list, int j, unsigned target_digits);

}  // namespace zetaforms
