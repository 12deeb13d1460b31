#include <algorithm>
#include <cmath>

#include "zetaforms/errors.hpp"
#include "zetaforms/numerics.hpp"

namespace zetaforms {

namespace {

using boost::multiprecision::pow;

// int_T^inf R(t) dt from R(t) = P t^-kappa g(1/t), where
// g(u) = prod_rho (1 - rho u) prod_l (1 + l u)^-(s+1) converges for |u| < 1/(2n).
// The truncation remainder is bounded through the majorant
// G(u) = prod_rho (1 + |rho| u) prod_l (1 - l u)^-(s+1), whose coefficients
// dominate |g_k|.
PrecisionValue tail_integral(const RationalFunctionRep& R, const Real& T, const Real& tolerance, const Real& eps) {
  const int kappa = decay_exponent(R.params);
  const unsigned order = static_cast<unsigned>(R.pole_order);
  const Real u = 1 / T;
  const Real P = to_real(R.prefactor);

  Real closed_majorant(1);
  for (const Rational& root : R.numerator_roots) closed_majorant *= 1 + abs(to_real(root)) * u;
  for (int l = 1; l < R.pole_count; ++l) closed_majorant /= pow(1 - Real(l) * u, static_cast<int>(order));

  for (std::size_t K = 32;; K *= 2) {
    TruncatedSeries<Real> g(K, Real(1));
    TruncatedSeries<Real> G(K, Real(1));
    for (const Rational& root : R.numerator_roots) {
      const Real rho = to_real(root);
      g.mul_linear(Real(1), -rho);
      G.mul_linear(Real(1), abs(rho));
    }
    for (int l = 1; l < R.pole_count; ++l) {
      g.mul_inverse_power(Real(1), order, Real(l));
      G.mul_inverse_power(Real(1), order, Real(-l));
    }

    Real value(0);
    Real partial_majorant(0);
    Real upow = pow(T, 1 - kappa);  // T^{1-kappa-k}
    Real majorant_pow(1);
    Real abs_sum(0);
    for (std::size_t k = 0; k < K; ++k) {
      const Real term = g[k] * upow / (kappa + static_cast<long>(k) - 1);
      value += term;
      abs_sum += abs(term);
      partial_majorant += G[k] * majorant_pow;
      upow *= u;
      majorant_pow *= u;
    }
    Real remainder = closed_majorant - partial_majorant;
    if (remainder < 0) remainder = 0;
    remainder += closed_majorant * Real(4 * K + R.numerator_degree() + 8) * eps;
    remainder *= pow(T, 1 - kappa) / (kappa + static_cast<long>(K) - 1);

    PrecisionValue out{P * value, abs(P) * (remainder + abs_sum * Real(4 * K + 8) * eps)};
    if (out.abs_error <= tolerance) return out;
    if (K > 4096) throw PrecisionError("tail integral expansion did not converge; increase the tail start");
  }
}

}  // namespace

PrecisionValue eval_r_direct(const Params& params, int j, unsigned target_digits, ParamPolicy policy) {
  const RationalFunctionRep R = build_R(params, policy);
  if (j < 1 || j > params.D) throw DomainError("j must lie in 1..D, got " + std::to_string(j));
  const Rational alpha(j, params.D);
  const int n = params.n;

  // Tail start: far enough out that 2n/T <= 1/4 (fast expansion at infinity)
  // and 2 pi T comfortably exceeds the Euler-Maclaurin orders needed.
  long M = std::max<long>({8L * n + 8, 24L, static_cast<long>(target_digits) / 2 + 12});

  for (int attempt = 0; attempt < 6; ++attempt, M *= 2) {
    Rational head{0};
    for (long m = 1; m < M; ++m) head += eval_R_exact(R, Rational(m) + alpha);

    const double magnitude = std::max(0.0, log10_abs(head));
    WorkingPrecision wp(working_digits(target_digits + 3, magnitude));
    const Real eps = wp.epsilon();
    const Real tolerance = pow10(-static_cast<int>(target_digits) - 2);

    const Real T = Real(M) + to_real(alpha);
    PrecisionValue tail = tail_integral(R, T, tolerance, eps);

    // Euler-Maclaurin corrections at t = T.
    constexpr std::size_t max_order = 2 * 90 + 2;
    const TruncatedSeries<Real> taylor = taylor_expansion(R, T, max_order);
    const int factors = R.numerator_degree() + R.pole_count * R.pole_order;
    Real em = taylor[0] / 2;
    Real em_abs = abs(em);
    Real remainder(-1);
    Real previous(-1);
    for (unsigned k = 1; 2 * k < max_order; ++k) {
      const Real term = -to_real(bernoulli(2 * k)) / (2 * k) * taylor[2 * k - 1];
      const Real magnitude = abs(term);
      if (magnitude <= tolerance / 2) {
        remainder = 2 * magnitude;
        break;
      }
      if (previous >= 0 && magnitude > previous) break;
      previous = magnitude;
      em += term;
      em_abs += magnitude;
    }
    if (remainder < 0) continue;  // corrections stopped shrinking: move the tail start out

    PrecisionValue out;
    out.value = to_real(head) + tail.value + em;
    out.abs_error = tail.abs_error + remainder + abs(to_real(head)) * eps +
                    em_abs * Real(factors * static_cast<long>(max_order) + 8) * eps;
    return out;
  }
  throw PrecisionError("eval_r_direct: could not reach 1e-" + std::to_string(target_digits));
}

}  // namespace zetaforms
