#pragma once

#include <string>

#include <boost/multiprecision/mpfr.hpp>

#include "zetaforms/core_arith.hpp"

namespace zetaforms {

using Real = boost::multiprecision::mpfr_float;

// Sets the MPFR default precision (decimal digits) for the enclosing scope and
// restores the previous value on exit. Boost keeps this setting in a single
// process-wide variable, so numeric routines must not run concurrently.
class WorkingPrecision {
 public:
  explicit WorkingPrecision(unsigned digits10);
  ~WorkingPrecision();
  WorkingPrecision(const WorkingPrecision&) = delete;
  WorkingPrecision& operator=(const WorkingPrecision&) = delete;

  unsigned digits() const noexcept { return digits_; }
  // Unit roundoff at this precision (generous: 10^(1 - digits)).
  Real epsilon() const;

 private:
  unsigned digits_;
  unsigned previous_;
};

struct Complex {
  Real re;
  Real im;

  Complex() : re(0), im(0) {}
  Complex(Real r, Real i = Real(0)) : re(std::move(r)), im(std::move(i)) {}

  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Complex& operator*=(const Complex& o) {
    Real r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  Complex& operator*=(const Real& x) {
    re *= x;
    im *= x;
    return *this;
  }
};

inline Complex operator+(Complex a, const Complex& b) { return a += b; }
inline Complex operator-(Complex a, const Complex& b) { return a -= b; }
inline Complex operator*(Complex a, const Complex& b) { return a *= b; }
inline Complex operator*(Complex a, const Real& x) { return a *= x; }
inline Complex operator*(const Real& x, Complex a) { return a *= x; }
inline Complex conj(const Complex& z) { return Complex(z.re, -z.im); }
inline Real abs(const Complex& z) { return boost::multiprecision::hypot(z.re, z.im); }
Complex inverse(const Complex& z);
Complex power(Complex base, unsigned exponent);

/// A value together with a bound on its absolute error.
template <class Scalar>
struct Approx {
  Scalar value;
  Real abs_error;
};

using PrecisionValue = Approx<Real>;
using ComplexValue = Approx<Complex>;

Real to_real(const Rational& q);
Real to_real(const Integer& z);
// 10^e at the current working precision.
Real pow10(int e);

// Working digits for a target accuracy: target + 15 guard digits + headroom
// for the magnitude of intermediate quantities.
unsigned working_digits(unsigned target_digits, double log10_magnitude = 0.0);

// Scientific notation with `significant` digits; always uses '.' as the
// decimal point.
std::string to_decimal(const Real& x, unsigned significant);
// Short form used for error bounds, e.g. "3.2e-41".
std::string to_error_string(const Real& x);

}  // namespace zetaforms
