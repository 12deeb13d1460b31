#include "zetaforms/core_arith.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <mutex>
#include <vector>

#include "zetaforms/errors.hpp"

namespace zetaforms {

Integer factorial(unsigned k) {
  Integer result{1};
  for (unsigned i = 2; i <= k; ++i) result *= i;
  return result;
}

Integer binomial(unsigned a, unsigned b) {
  if (b > a) {
    throw DomainError("binomial(" + std::to_string(a) + ", " + std::to_string(b) + "): b > a");
  }
  b = std::min(b, a - b);
  Integer result{1};
  for (unsigned i = 1; i <= b; ++i) {
    result *= a - b + i;
    result /= i;  // exact: product of i consecutive integers divided by i!
  }
  return result;
}

Rational pochhammer(const Rational& a, unsigned k) {
  Rational result{1};
  for (unsigned i = 0; i < k; ++i) result *= a + i;
  return result;
}

LcmValue lcm_upto(unsigned n) {
  if (n == 0) throw DomainError("lcm_upto requires n >= 1");
  LcmValue out{n, Integer{1}};
  for (unsigned k = 2; k <= n; ++k) out.value = boost::multiprecision::lcm(out.value, Integer{k});
  return out;
}

namespace {

// B_0..B_m via sum_{j=0}^{m} C(m+1, j) B_j = 0, with B_1 = -1/2.
class BernoulliTable {
 public:
  Rational get(unsigned k) {
    std::lock_guard lock(mutex_);
    while (values_.size() <= k) {
      const unsigned m = static_cast<unsigned>(values_.size());
      if (m == 0) {
        values_.emplace_back(1);
        continue;
      }
      Rational acc{0};
      for (unsigned j = 0; j < m; ++j) acc += Rational(binomial(m + 1, j)) * values_[j];
      values_.push_back(-acc / Rational(m + 1));
    }
    return values_[k];
  }

 private:
  std::mutex mutex_;
  std::vector<Rational> values_;
};

BernoulliTable& bernoulli_table() {
  static BernoulliTable table;
  return table;
}

}  // namespace

Rational bernoulli(unsigned k) {
  if (k % 2 != 0) throw DomainError("bernoulli(" + std::to_string(k) + "): index must be even");
  return bernoulli_table().get(k);
}

Rational power(const Rational& base, int exponent) {
  if (exponent < 0) {
    if (base == 0) throw DomainError("zero to a negative power");
    return power(Rational(1) / base, -exponent);
  }
  Rational result{1};
  Rational b = base;
  for (unsigned e = static_cast<unsigned>(exponent); e != 0; e >>= 1) {
    if (e & 1U) result *= b;
    if (e > 1) b *= b;
  }
  return result;
}

Integer power(const Integer& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

std::string to_string(const Rational& q) {
  if (is_integer(q)) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

std::string to_string(const Integer& z) { return z.str(); }

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  auto valid_integer = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den)) {
    throw DomainError("not a rational number: '" + std::string(text) + "'");
  }
  auto strip_plus = [](std::string_view s) { return std::string(s.front() == '+' ? s.substr(1) : s); };
  const Integer d(strip_plus(den));
  if (d == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  return Rational(Integer(strip_plus(num)), d);
}

double log10_abs(const Rational& q) {
  if (q == 0) return -std::numeric_limits<double>::infinity();
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  auto log10_int = [](const Integer& z) {
    const Integer a = abs(z);
    const std::size_t bits = boost::multiprecision::msb(a) + 1;
    if (bits < 1000) return std::log10(a.convert_to<double>());
    const Integer top = a >> (bits - 64);
    return std::log10(top.convert_to<double>()) + static_cast<double>(bits - 64) * std::log10(2.0);
  };
  return log10_int(numerator(q)) - log10_int(denominator(q));
}

}  // namespace zetaforms
