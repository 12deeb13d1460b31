#include <cmath>

#include "zetaforms/errors.hpp"
#include "zetaforms/numerics.hpp"

namespace zetaforms {

namespace {

// Euler-Maclaurin for real exponent > 1 and shift > 0. For this completely
// monotone summand the remainder is bounded by the first omitted correction.
PrecisionValue hurwitz_em(int i, const Real& alpha, unsigned target_digits) {
  WorkingPrecision wp(working_digits(target_digits));
  const Real tolerance = pow10(-static_cast<int>(target_digits) - 2);

  for (long N = std::max<long>(10, static_cast<long>(target_digits) + 10);; N *= 2) {
    Real head(0);
    for (long k = 0; k < N; ++k) head += 1 / boost::multiprecision::pow(Real(k) + alpha, i);

    const Real x = Real(N) + alpha;
    Real sum = head + boost::multiprecision::pow(x, 1 - i) / (i - 1) + boost::multiprecision::pow(x, -i) / 2;

    // term_k = B_2k / (2k)! * (i)_{2k-1} * x^{-i-2k+1}
    Real rising(i);  // (i)_{2k-1} for k = 1
    Real factorial2k(2);
    Real xpow = boost::multiprecision::pow(x, -i - 1);
    const Real inv_x2 = 1 / (x * x);
    Real previous_magnitude(-1);
    for (unsigned k = 1; k < 400; ++k) {
      const Real term = to_real(bernoulli(2 * k)) / factorial2k * rising * xpow;
      const Real magnitude = abs(term);
      if (magnitude <= tolerance) {
        PrecisionValue out{sum, magnitude};
        out.abs_error += abs(sum) * Real(N + 2 * k + 8) * wp.epsilon();
        return out;
      }
      if (previous_magnitude >= 0 && magnitude > previous_magnitude) break;  // asymptotic regime exhausted
      previous_magnitude = magnitude;
      sum += term;
      // advance to k+1
      rising *= Real(i + 2 * k - 1) * Real(i + 2 * k);
      factorial2k *= Real(2 * k + 1) * Real(2 * k + 2);
      xpow *= inv_x2;
    }
    if (N > (1L << 22)) throw PrecisionError("hurwitz_zeta: Euler-Maclaurin failed to converge");
  }
}

}  // namespace

PrecisionValue hurwitz_zeta(int i, const Rational& alpha, unsigned target_digits) {
  if (i < 2) throw DomainError("hurwitz_zeta(" + std::to_string(i) + ", .): series diverges for i < 2");
  if (alpha <= 0 || alpha > 1) throw DomainError("hurwitz_zeta: alpha must lie in (0, 1], got " + to_string(alpha));
  WorkingPrecision wp(working_digits(target_digits));
  return hurwitz_em(i, to_real(alpha), target_digits);
}

}  // namespace zetaforms
