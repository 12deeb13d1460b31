#include "zetaforms/precision.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace zetaforms {

WorkingPrecision::WorkingPrecision(unsigned digits10)
    : digits_(digits10), previous_(Real::default_precision()) {
  Real::default_precision(digits10);
}

WorkingPrecision::~WorkingPrecision() { Real::default_precision(previous_); }

Real WorkingPrecision::epsilon() const { return pow10(1 - static_cast<int>(digits_)); }

Complex inverse(const Complex& z) {
  const Real norm = z.re * z.re + z.im * z.im;
  return Complex(z.re / norm, -z.im / norm);
}

Complex power(Complex base, unsigned exponent) {
  Complex result(Real(1), Real(0));
  for (; exponent != 0; exponent >>= 1) {
    if (exponent & 1U) result *= base;
    if (exponent > 1) base *= base;
  }
  return result;
}

Real to_real(const Rational& q) {
  return Real(boost::multiprecision::numerator(q)) / Real(boost::multiprecision::denominator(q));
}

Real to_real(const Integer& z) { return Real(z); }

Real pow10(int e) { return boost::multiprecision::pow(Real(10), e); }

unsigned working_digits(unsigned target_digits, double log10_magnitude) {
  const double headroom = std::max(0.0, std::ceil(log10_magnitude));
  return target_digits + 15 + static_cast<unsigned>(headroom);
}

std::string to_decimal(const Real& x, unsigned significant) {
  // Boost formats through mpfr_get_str and inserts the point itself, so the
  // C locale never leaks in.
  return x.str(static_cast<std::streamsize>(std::max(1U, significant)), std::ios_base::scientific);
}

std::string to_error_string(const Real& x) {
  if (x == 0) return "0";
  return x.str(2, std::ios_base::scientific);
}

}  // namespace zetaforms
