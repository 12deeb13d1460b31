#pragma once

#include <string>
#include <vector>

#include "zetaforms/errors.hpp"
#include "zetaforms/precision.hpp"

namespace zetaforms::detail {

struct PowerLawSum {
  std::vector<Real> class_sums;  // sums over k = c (mod classes)
  Real total;
  Real tail_bound;
  Real rounding;
  long terms = 0;
};

// Sums term(k), k = 0, 1, ..., whose magnitudes decay like C k^-kappa (kappa >= 2).
//
// At cutoffs K = 128, 256, ... the remainder is bounded by the power-law
// envelope 2 |t_{K-1}| (K-1) / (kappa-1). A cutoff is accepted when that bound
// is below `tolerance`, the magnitudes decreased over the last stretch, and the
// change since the previous cutoff is within the previous bound. Term
// recurrences are assumed to lose at most `ops_per_term` roundoffs per step.
template <class Next>
PowerLawSum sum_power_law(Next&& next, int kappa, const Real& tolerance, long budget, unsigned classes,
                          unsigned ops_per_term, const Real& eps) {
  if (kappa < 2) throw ConsistencyError("power-law series with decay exponent < 2 diverges or is unbounded");
  PowerLawSum out;
  out.class_sums.assign(classes, Real(0));
  out.total = 0;
  Real abs_total(0);
  Real last(0);
  Real previous_total(0);
  Real previous_bound(-1);
  long k = 0;
  for (long cutoff = 64;; cutoff *= 2) {
    bool monotone = true;
    for (; k < cutoff; ++k) {
      Real t = next(k);
      Real a = abs(t);
      if (k > cutoff / 2 && a > last) monotone = false;
      last = a;
      out.class_sums[static_cast<std::size_t>(k % classes)] += t;
      out.total += t;
      abs_total += a;
    }
    const Real bound = 2 * last * (k - 1) / (kappa - 1);
    const bool consistent = previous_bound >= 0 && abs(out.total - previous_total) <= previous_bound;
    if (monotone && consistent && bound <= tolerance) {
      out.tail_bound = bound;
      break;
    }
    if (cutoff * 2 > budget) {
      throw PrecisionError("series did not reach tolerance " + to_error_string(tolerance) + " within " +
                           std::to_string(budget) + " terms (envelope bound " + to_error_string(bound) +
                           "); raise the term budget or lower the target");
    }
    previous_total = out.total;
    previous_bound = bound;
  }
  out.terms = k;
  out.rounding = abs_total * Real(ops_per_term) * Real(k + 1) * eps;
  return out;
}

}  // namespace zetaforms::detail
