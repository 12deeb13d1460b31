#include <cmath>

#include "power_law_sum.hpp"
#include "zetaforms/errors.hpp"
#include "zetaforms/numerics.hpp"

namespace zetaforms {

PrecisionValue eval_form_numeric(const HurwitzLinearForm& form, unsigned target_digits) {
  Rational weight{1};
  for (const auto& [i, a] : form.a) weight += abs(a);
  const unsigned zeta_digits = target_digits + static_cast<unsigned>(std::ceil(std::max(0.0, log10_abs(weight)))) + 2;
  const double magnitude = std::max(log10_abs(weight), log10_abs(form.a0 == 0 ? Rational(1) : form.a0));

  WorkingPrecision wp(working_digits(target_digits, magnitude));
  PrecisionValue out{to_real(form.a0), Real(0)};
  Real abs_sum = abs(out.value);
  for (const auto& [i, a] : form.a) {
    const PrecisionValue zeta = hurwitz_zeta(i, form.alpha(), zeta_digits);
    const Real coefficient = to_real(a);
    out.value += coefficient * zeta.value;
    out.abs_error += abs(coefficient) * zeta.abs_error;
    abs_sum += abs(coefficient * zeta.value);
  }
  out.abs_error += abs_sum * Real(2 * form.a.size() + 4) * wp.epsilon();
  return out;
}

FilterCheck roots_filter_check(const Params& params, int j, const Rational& x, unsigned target_digits) {
  const int D = params.D;
  if (D < 1 || params.n < 0) throw ValidationError("D >= 1, n >= 0", "filter identity parameters");
  if (j < 1 || j > D) throw DomainError("j must lie in 1..D, got " + std::to_string(j));
  if (abs(x) >= 1) throw DomainError("roots_filter_check needs |x| < 1, got " + to_string(x));

  const long a = 3L * D * params.n + 2;
  const Real a_real(a);
  WorkingPrecision wp(working_digits(target_digits, static_cast<double>(a) * std::log10(2.0)));
  const Real eps = wp.epsilon();
  const Real tolerance = pow10(-static_cast<int>(target_digits)) / 4;
  const Real xr = to_real(x);
  const Real ax = abs(xr);

  FilterCheck check;
  // LHS: sum over l = j-1 (mod D) of (a)_l / l! x^l.
  Real term(1);
  Real lhs(0);
  Real abs_sum(0);
  long l = 0;
  for (;; ++l) {
    if (l % D == j - 1) {
      lhs += term;
      abs_sum += abs(term);
    }
    const Real next = term * (a_real + l) / Real(l + 1) * xr;
    const long L = l + 1;
    const Real rho = (a_real + L) / Real(L + 1) * ax;
    if (rho < 1) {
      const Real tail = abs(next) / (1 - rho);
      if (tail <= tolerance) {
        check.lhs = {lhs, tail};
        break;
      }
    }
    term = next;
    if (l > 1'000'000) throw PrecisionError("roots_filter_check: series did not converge");
  }
  check.terms_used = l + 1;
  check.lhs.abs_error += abs_sum * Real(4 * (l + 2)) * eps;

  // RHS: (1/D) sum_m xi^{-m(j-1)} (1 - xi^m x)^{-a}
  Complex rhs;
  Real rhs_error(0);
  for (int m = 1; m <= D; ++m) {
    const RootOfUnity xi = root_of_unity(D, m, wp.digits());
    const RootOfUnity weight = root_of_unity(D, -m * (j - 1), wp.digits());
    const Complex base = Complex(Real(1)) - xi.value.value * xr;
    const Complex value = inverse(power(base, static_cast<unsigned>(a)));
    rhs += weight.value.value * value;
    const Real magnitude = abs(value);
    const Real delta = xi.value.abs_error * ax;
    rhs_error += magnitude * (weight.value.abs_error + a_real * delta / abs(base) * 2) + magnitude * Real(2 * a + 8) * eps;
  }
  check.rhs.value = rhs * (Real(1) / D);
  check.rhs.abs_error = rhs_error / D;

  check.residual = abs(check.rhs.value - Complex(check.lhs.value));
  check.combined_error = check.lhs.abs_error + check.rhs.abs_error;
  check.pass = check.residual <= check.combined_error;
  return check;
}

PfqCheck pfq_cross_check(const Params& params, int j, unsigned target_digits) {
  const RationalFunctionRep R = build_R(params);
  const int D = params.D, s = params.s, n = params.n;
  if (j < 1 || j > D) throw DomainError("j must lie in 1..D, got " + std::to_string(j));
  const Rational alpha(j, D);

  PfqCheck check;
  for (int l = 1; l <= D; ++l) check.upper.push_back(Rational(3 * n) + Rational(j + l, D));
  for (int r = 0; r <= s; ++r) check.upper.push_back(Rational(n) + alpha);
  for (int l = 1; l <= D; ++l) {
    if (l != j) check.lower.push_back(Rational(1) + Rational(j - l, D));
  }
  for (int r = 0; r <= s; ++r) check.lower.push_back(Rational(2 * n + 1) + alpha);

  Rational numerator = power(Rational(factorial(static_cast<unsigned>(n))), s + 1 - 3 * D);
  for (int l = 0; l <= 3 * D * n; ++l) numerator *= l + j;
  Rational denominator(D);
  for (int l = 0; l <= n; ++l) denominator *= power(Rational(n + l) + alpha, s + 1);
  check.prefactor = numerator / denominator;

  const double magnitude = std::max(0.0, log10_abs(check.prefactor));
  WorkingPrecision wp(working_digits(target_digits + 1, magnitude));
  const Real eps = wp.epsilon();
  const Real P = to_real(check.prefactor);
  const Real tolerance = pow10(-static_cast<int>(target_digits)) / (4 * abs(P));

  std::vector<Real> upper, lower;
  for (const auto& q : check.upper) upper.push_back(to_real(q));
  for (const auto& q : check.lower) lower.push_back(to_real(q));
  Real term(1);
  auto next = [&](long k) {
    if (k > 0) {
      Real ratio(1);
      for (const Real& u : upper) ratio *= u + (k - 1);
      for (const Real& b : lower) ratio /= b + (k - 1);
      term *= ratio / k;
    }
    return term;
  };
  const unsigned ops = static_cast<unsigned>(2 * (upper.size() + lower.size()) + 4);
  const detail::PowerLawSum sum = detail::sum_power_law(next, decay_exponent(params), tolerance, 1L << 23, 1, ops, eps);
  check.terms_used = sum.terms;
  check.series = {sum.total, sum.tail_bound + sum.rounding};
  check.value = {P * sum.total, abs(P) * (sum.tail_bound + sum.rounding) + abs(P * sum.total) * 4 * eps};

  // For n >= 1 the m < n terms of r_{n,j} vanish; for n = 0 the hypergeometric
  // row starts at m = 0, so R(j/D) is added back.
  check.reference = eval_r_direct(params, j, target_digits + 1);
  if (n == 0) check.reference.value += to_real(eval_R_exact(R, alpha));

  check.residual = abs(check.value.value - check.reference.value);
  check.combined_error = check.value.abs_error + check.reference.abs_error;
  check.pass = check.residual <= check.combined_error;
  return check;
}

std::vector<GrowthRow> growth_report(std::span<const Params> params_list, int j, unsigned target_digits) {
  std::vector<GrowthRow> rows;
  for (const Params& p : params_list) {
    if (p.n < 1) throw ValidationError("n >= 1", "growth rows need n >= 1 for the n-th root");
    GrowthRow row;
    row.n = p.n;
    row.r = eval_r_direct(p, j, target_digits);
    WorkingPrecision wp(working_digits(target_digits));
    row.positive = row.r.value - row.r.abs_error > 0;
    row.nth_root = row.positive ? Real(pow(row.r.value, Real(1) / p.n)) : Real(0);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace zetaforms
