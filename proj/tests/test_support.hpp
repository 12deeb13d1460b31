#pragma once

#include <random>
#include <string>

#include "zetaforms/core_arith.hpp"
#include "zetaforms/precision.hpp"

namespace zetaforms::testing {

// Deterministic rational in [lo, hi] with a small denominator.
inline Rational random_rational(std::mt19937_64& rng, int lo, int hi, int max_den = 97) {
  std::uniform_int_distribution<int> den(1, max_den);
  const int d = den(rng);
  std::uniform_int_distribution<long> num(static_cast<long>(lo) * d, static_cast<long>(hi) * d);
  return Rational(num(rng), d);
}

inline Real parse_real(const std::string& digits) { return Real(digits); }

inline bool within(const Real& a, const Real& b, const Real& tol) { return abs(a - b) <= tol; }

}  // namespace zetaforms::testing
