#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace zetaforms {

// Power series in h truncated after `size()` coefficients, over an exact or
// floating scalar. Only the multiplications needed to expand products of
// linear factors and inverse powers of linear factors are provided.
template <class Scalar>
class TruncatedSeries {
 public:
  TruncatedSeries(std::size_t size, Scalar constant) : coeffs_(size, Scalar(0)) {
    if (size > 0) coeffs_[0] = std::move(constant);
  }

  std::size_t size() const noexcept { return coeffs_.size(); }
  const Scalar& operator[](std::size_t k) const { return coeffs_[k]; }
  const std::vector<Scalar>& coefficients() const noexcept { return coeffs_; }

  // *= (c + b h)
  TruncatedSeries& mul_linear(const Scalar& c, const Scalar& b = Scalar(1)) {
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      Scalar next = coeffs_[k] * c;
      if (k > 0) next += coeffs_[k - 1] * b;
      coeffs_[k] = std::move(next);
    }
    return *this;
  }

  // *= (d + b h)^(-e), d != 0
  TruncatedSeries& mul_inverse_power(const Scalar& d, unsigned e, const Scalar& b = Scalar(1)) {
    // (d + b h)^(-e) = d^(-e) sum_k binom(-e, k) (b/d)^k h^k
    std::vector<Scalar> factor(coeffs_.size(), Scalar(0));
    if (factor.empty()) return *this;
    Scalar lead(1);
    for (unsigned i = 0; i < e; ++i) lead /= d;
    const Scalar ratio = b / d;
    factor[0] = lead;
    for (std::size_t k = 1; k < factor.size(); ++k) {
      factor[k] = factor[k - 1] * ratio * Scalar(-static_cast<long>(e + k - 1)) / Scalar(static_cast<long>(k));
    }
    return *this *= factor;
  }

  TruncatedSeries& operator*=(const std::vector<Scalar>& other) {
    std::vector<Scalar> out(coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] == 0) continue;
      for (std::size_t j = 0; i + j < out.size() && j < other.size(); ++j) out[i + j] += coeffs_[i] * other[j];
    }
    coeffs_ = std::move(out);
    return *this;
  }

 private:
  std::vector<Scalar> coeffs_;
};

}  // namespace zetaforms
