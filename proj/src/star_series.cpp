#include <cmath>

#include <boost/math/constants/constants.hpp>

#include "power_law_sum.hpp"
#include "zetaforms/errors.hpp"
#include "zetaforms/numerics.hpp"

namespace zetaforms {

Rational beta_factor(const Params& p, unsigned k) {
  Rational denominator{1};
  for (int r = 0; r <= p.n; ++r) denominator *= Rational(p.D * p.n + static_cast<int>(k) + 1 + r * p.D);
  return Rational(factorial(static_cast<unsigned>(p.n)) * power(Integer(p.D), static_cast<unsigned>(p.n))) / denominator;
}

RootOfUnity root_of_unity(int D, int m, unsigned digits) {
  if (D < 1) throw DomainError("root_of_unity: D must be positive");
  RootOfUnity root;
  root.D = D;
  root.m = ((m % D) + D) % D;
  WorkingPrecision wp(digits);
  if (D <= 2) {
    root.exact = true;
    const bool minus_one = D == 2 && root.m == 1;
    root.value = {Complex(Real(minus_one ? -1 : 1), Real(0)), Real(0)};
    return root;
  }
  const Real angle = 2 * boost::math::constants::pi<Real>() * root.m / D;
  root.value = {Complex(cos(angle), sin(angle)), 4 * wp.epsilon()};
  return root;
}

namespace {

// Class sums S_c = sum_{k = c (mod D)} binom(3Dn+1+k, k) I_k^{s+1}, c = 0..D-1.
// All terms are positive; they are produced by the exact ratio
// (3Dn+2+k)/(k+1) * prod_r ((Dn+k+1+rD)/(Dn+k+2+rD))^{s+1}.
detail::PowerLawSum star_class_sums(const Params& p, const Real& tolerance, long budget, const Real& eps) {
  const int D = p.D, s = p.s, n = p.n;
  Real term = to_real(power(beta_factor(p, 0), s + 1));
  auto next = [&](long k) {
    if (k > 0) {
      Real ratio = Real(3 * D * n + 1 + k) / Real(k);
      Real beta_ratio(1);
      for (int r = 0; r <= n; ++r) beta_ratio *= Real(D * n + k + r * D) / Real(D * n + k + 1 + r * D);
      term *= ratio * boost::multiprecision::pow(beta_ratio, s + 1);
    }
    return term;
  };
  const unsigned ops = static_cast<unsigned>(2 * (n + 1) + s + 8);
  return detail::sum_power_law(next, decay_exponent(p), tolerance, budget, static_cast<unsigned>(D), ops, eps);
}

Rational theorem1_prefactor(const Params& p) {
  return Rational(power(Integer(p.D), static_cast<unsigned>(p.s - 1)) * factorial(static_cast<unsigned>(3 * p.D * p.n + 1))) /
         Rational(power(factorial(static_cast<unsigned>(p.n)), static_cast<unsigned>(3 * p.D)));
}

}  // namespace

StarIntegralValue eval_r_star(const Params& params, int m, unsigned target_digits, long term_budget) {
  validate(params);
  if (m < 1 || m > params.D) throw DomainError("m must lie in 1..D, got " + std::to_string(m));
  const int kappa = decay_exponent(params);
  if (kappa < 2) throw ConsistencyError("decay exponent below 2 contradicts s >= 3D-1");

  WorkingPrecision wp(working_digits(target_digits));
  const Real eps = wp.epsilon();
  const Real tolerance = pow10(-static_cast<int>(target_digits)) / 2;
  const detail::PowerLawSum sums = star_class_sums(params, tolerance, term_budget, eps);

  StarIntegralValue out;
  out.params = params;
  out.m = m;
  out.terms_used = sums.terms;
  out.tail_bound = sums.tail_bound;
  out.value.value = Complex();
  Real root_error(0);
  for (int c = 0; c < params.D; ++c) {
    // k = c (mod D) contributes xi^{m(k+1)} = xi^{m(c+1)}
    const RootOfUnity xi = root_of_unity(params.D, m * (c + 1), wp.digits());
    out.value.value += xi.value.value * sums.class_sums[static_cast<std::size_t>(c)];
    root_error += xi.value.abs_error * sums.class_sums[static_cast<std::size_t>(c)];
  }
  out.value.abs_error = sums.tail_bound + sums.rounding + root_error + sums.total * 8 * eps;
  return out;
}

Theorem1Check verify_theorem1(const Params& params, int j, unsigned target_digits) {
  validate(params);
  if (params.n < 1) {
    throw ValidationError("n >= 1", "the integral representation drops the m < n terms via numerator zeros, absent for n = 0");
  }
  if (j < 1 || j > params.D) throw DomainError("j must lie in 1..D, got " + std::to_string(j));

  const Rational prefactor = theorem1_prefactor(params);
  const double scale = log10_abs(prefactor) + std::log10(static_cast<double>(params.D));
  const unsigned star_digits = target_digits + static_cast<unsigned>(std::max(0.0, std::ceil(scale))) + 1;

  Theorem1Check check;
  check.direct = eval_r_direct(params, j, target_digits);

  WorkingPrecision wp(working_digits(star_digits));
  Complex combination;
  Real combination_error(0);
  for (int m = 1; m <= params.D; ++m) {
    StarIntegralValue star = eval_r_star(params, m, star_digits);
    const RootOfUnity xi = root_of_unity(params.D, -m * j, wp.digits());
    combination += xi.value.value * star.value.value;
    combination_error += star.value.abs_error + xi.value.abs_error * abs(star.value.value);
    check.stars.push_back(std::move(star));
  }
  const Real P = to_real(prefactor);
  check.reconstructed.value = P * combination;
  check.reconstructed.abs_error = P * combination_error + abs(check.reconstructed.value) * 4 * wp.epsilon();

  check.residual = abs(check.reconstructed.value - Complex(check.direct.value));
  check.imaginary = abs(check.reconstructed.value.im);
  check.combined_error = check.direct.abs_error + check.reconstructed.abs_error;
  check.pass = check.residual <= check.combined_error && check.imaginary <= check.combined_error;
  return check;
}

}  // namespace zetaforms
