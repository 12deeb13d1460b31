#include "zetaforms/rational_function.hpp"

#include <cmath>
#include <string>

#include "zetaforms/errors.hpp"

namespace zetaforms {

void validate(const Params& p, ParamPolicy policy) {
  if (p.D < 1) throw ValidationError("D >= 1", "D = " + std::to_string(p.D));
  if (p.s < 1) throw ValidationError("s >= 1", "s = " + std::to_string(p.s));
  if (p.s < 3 * p.D - 1) {
    throw ValidationError("s >= 3D-1", "s = " + std::to_string(p.s) + ", 3D-1 = " + std::to_string(3 * p.D - 1));
  }
  if (p.n < 0) throw ValidationError("n >= 0", "n = " + std::to_string(p.n));
  if (p.n % 2 != 0) {
    if (!policy.allow_odd_n) throw ValidationError("n even", "n = " + std::to_string(p.n));
    if (p.D != 2) throw ValidationError("odd n requires D = 2", "D = " + std::to_string(p.D));
  }
  if (p.precision_digits < 10) {
    throw ValidationError("precision_digits >= 10", "precision_digits = " + std::to_string(p.precision_digits));
  }
}

int decay_exponent(const Params& p) { return (p.n + 1) * (p.s + 1) - (3 * p.D * p.n + 1); }

int reflection_sign(const Params& p) {
  const int parity = (3 * p.D * p.n + 1 + (p.s + 1) * (p.n + 1)) % 2;
  return parity == 0 ? 1 : -1;
}

RationalFunctionRep build_R(const Params& params, ParamPolicy policy) {
  validate(params, policy);
  const int D = params.D, s = params.s, n = params.n;
  RationalFunctionRep R;
  R.params = params;
  R.prefactor = power(Rational(D), 3 * D * n) * power(Rational(factorial(static_cast<unsigned>(n))), s + 1 - 3 * D);
  R.numerator_roots.reserve(static_cast<std::size_t>(3 * D * n + 1));
  for (int l = 0; l <= 3 * D * n; ++l) R.numerator_roots.push_back(Rational(n) - Rational(l, D));
  R.pole_count = n + 1;
  R.pole_order = s + 1;
  if (R.numerator_degree() + 2 > R.denominator_degree()) {
    throw ConsistencyError("R_n is not decaying at least like t^-2");
  }
  return R;
}

Rational eval_R_exact(const RationalFunctionRep& R, const Rational& t) {
  Rational denominator{1};
  for (int l = 0; l < R.pole_count; ++l) {
    const Rational shifted = t + l;
    if (shifted == 0) throw PoleError("R_n has a pole at t = " + to_string(t));
    denominator *= power(shifted, R.pole_order);
  }
  Rational value = R.prefactor;
  for (const Rational& root : R.numerator_roots) value *= t - root;
  return value / denominator;
}

namespace {

// Distance from t to the nearest pole.
Real pole_distance(const RationalFunctionRep& R, const Real& t) {
  Real best = abs(t);
  for (int l = 1; l < R.pole_count; ++l) best = std::min<Real>(best, abs(t + l));
  return best;
}

}  // namespace

TruncatedSeries<Real> taylor_expansion(const RationalFunctionRep& R, const Real& t0, std::size_t order) {
  TruncatedSeries<Real> series(order, to_real(R.prefactor));
  for (const Rational& root : R.numerator_roots) series.mul_linear(t0 - to_real(root));
  for (int l = 0; l < R.pole_count; ++l) {
    const Real base = t0 + l;
    if (base == 0) throw PoleError("Taylor expansion requested at a pole");
    series.mul_inverse_power(base, static_cast<unsigned>(R.pole_order));
  }
  return series;
}

PrecisionValue eval_R_float(const RationalFunctionRep& R, const PrecisionValue& t) {
  const int target = R.params.precision_digits;
  // Rough magnitude first, to size the working precision.
  double log_mag = std::log10(std::max(1.0, std::abs(log10_abs(R.prefactor))));
  {
    WorkingPrecision rough(30);
    const Real dist = pole_distance(R, t.value);
    if (dist == 0 || dist <= 2 * t.abs_error) {
      throw ConditioningError("evaluation point within its own error bound of a pole");
    }
    Real mag = abs(to_real(R.prefactor));
    for (const Rational& root : R.numerator_roots) mag *= std::max<Real>(Real(1), abs(t.value - to_real(root)));
    for (int l = 0; l < R.pole_count; ++l) mag /= boost::multiprecision::pow(abs(t.value + l), R.pole_order);
    log_mag = std::max(log_mag, static_cast<double>(log10(mag + 1)));
  }
  WorkingPrecision wp(working_digits(static_cast<unsigned>(target), log_mag));
  const Real x = t.value;

  const TruncatedSeries<Real> local = taylor_expansion(R, x, 3);
  PrecisionValue out{local[0], Real(0)};

  // Rounding: one relative eps per factor.
  const int factors = R.numerator_degree() + R.pole_count * R.pole_order + 2;
  out.abs_error = abs(out.value) * factors * wp.epsilon();

  if (t.abs_error != 0) {
    // |R(x+d) - R(x)| <= |R'(x)| d + M2 d^2 with M2 bounded via the second
    // Taylor coefficient, valid while d is well inside the pole distance.
    const Real dist = pole_distance(R, x);
    const Real d = t.abs_error;
    if (d * 4 > dist) throw ConditioningError("input uncertainty comparable to the distance to a pole");
    out.abs_error += abs(local[1]) * d + 4 * abs(local[2]) * d * d;
  }
  if (out.abs_error > pow10(-target)) {
    throw ConditioningError("cannot reach 1e-" + std::to_string(target) + " near a pole (error bound " +
                            to_error_string(out.abs_error) + ")");
  }
  return out;
}

bool check_symmetry(const RationalFunctionRep& R, std::span<const Rational> sample_points) {
  const Rational sigma(reflection_sign(R.params));
  const Rational n(R.params.n);
  for (const Rational& t : sample_points) {
    if (eval_R_exact(R, -n - t) != sigma * eval_R_exact(R, t)) return false;
  }
  return true;
}

}  // namespace zetaforms
