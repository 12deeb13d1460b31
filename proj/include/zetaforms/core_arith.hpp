#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace zetaforms {

using Integer = boost::multiprecision::mpz_int;
// GMP canonicalises after every operation: always lowest terms, positive denominator.
using Rational = boost::multiprecision::mpq_rational;

Integer factorial(unsigned k);

// Throws DomainError when b > a.
Integer binomial(unsigned a, unsigned b);

// Rising factorial a(a+1)...(a+k-1); (a)_0 = 1.
Rational pochhammer(const Rational& a, unsigned k);

/// lcm(1, ..., n). `value` is divisible by every k <= n.
struct LcmValue {
  unsigned n = 1;
  Integer value{1};
};

LcmValue lcm_upto(unsigned n);

// Bernoulli number B_k for even k (B_2 = 1/6). Odd k throws DomainError.
// Memoised; the table is shared and guarded.
Rational bernoulli(unsigned k);

Rational power(const Rational& base, int exponent);
Integer power(const Integer& base, unsigned exponent);

inline bool is_integer(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Accepts "p", "p/q", "-p/q" with optional surrounding spaces.
Rational parse_rational(std::string_view text);

// Decimal exponent estimate of |q| (log10), -inf for zero.
double log10_abs(const Rational& q);

}  // namespace zetaforms
