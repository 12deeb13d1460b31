#pragma once

#include <map>
#include <vector>

#include <json.hpp>

#include "zetaforms/rational_function.hpp"

namespace zetaforms {

/// Exact coefficients A[l][i] of (t+l)^-i in the partial-fraction expansion
/// of R_n, for l = 0..n and i = 1..s+1.
class PartialFractionTable {
 public:
  PartialFractionTable(Params params, std::vector<std::vector<Rational>> rows);

  const Params& params() const noexcept { return params_; }
  int pole_count() const noexcept { return static_cast<int>(rows_.size()); }
  int max_order() const noexcept { return params_.s + 1; }

  // 0 <= l <= n, 1 <= i <= s+1
  const Rational& operator()(int l, int i) const { return rows_.at(static_cast<std::size_t>(l)).at(static_cast<std::size_t>(i - 1)); }

  // sum_l A[l][i]
  Rational column_sum(int i) const;

 private:
  Params params_;
  std::vector<std::vector<Rational>> rows_;
};

// Local Laurent expansion at each pole, read off from exact truncated series.
PartialFractionTable decompose(const RationalFunctionRep& R);

// sum_{l,i} A[l][i] / (t+l)^i. Throws PoleError at a pole.
Rational reconstruct_eval(const PartialFractionTable& table, const Rational& t);

// i -> whether sum_l A[l][i] vanishes exactly.
std::map<int, bool> parity_profile(const PartialFractionTable& table);

// Checks A[n-l][i] == sigma (-1)^i A[l][i] for all l, i (sigma = reflection sign).
bool reflection_relation_holds(const PartialFractionTable& table);

// Rows {"l": int, "i": int, "A": "p/q"}.
nlohmann::json to_json(const PartialFractionTable& table);

}  // namespace zetaforms
