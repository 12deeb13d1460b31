#include "zetaforms/partial_fractions.hpp"

#include "zetaforms/errors.hpp"

namespace zetaforms {

PartialFractionTable::PartialFractionTable(Params params, std::vector<std::vector<Rational>> rows)
    : params_(params), rows_(std::move(rows)) {}

Rational PartialFractionTable::column_sum(int i) const {
  Rational sum{0};
  for (const auto& row : rows_) sum += row.at(static_cast<std::size_t>(i - 1));
  return sum;
}

PartialFractionTable decompose(const RationalFunctionRep& R) {
  const int order = R.pole_order;  // s + 1
  const std::size_t terms = static_cast<std::size_t>(order);
  std::vector<std::vector<Rational>> rows;
  rows.reserve(static_cast<std::size_t>(R.pole_count));

  for (int l = 0; l < R.pole_count; ++l) {
    // g(h) = R(-l + h) h^{s+1}, expanded to h^s.
    TruncatedSeries<Rational> g(terms, R.prefactor);
    for (const Rational& root : R.numerator_roots) g.mul_linear(Rational(-l) - root);
    for (int other = 0; other < R.pole_count; ++other) {
      if (other == l) continue;
      g.mul_inverse_power(Rational(other - l), static_cast<unsigned>(order));
    }
    // Coefficient of (t+l)^-i is the h^{s+1-i} coefficient of g.
    std::vector<Rational> row(terms);
    for (int i = 1; i <= order; ++i) row[static_cast<std::size_t>(i - 1)] = g[static_cast<std::size_t>(order - i)];
    rows.push_back(std::move(row));
  }
  return PartialFractionTable(R.params, std::move(rows));
}

Rational reconstruct_eval(const PartialFractionTable& table, const Rational& t) {
  Rational sum{0};
  for (int l = 0; l < table.pole_count(); ++l) {
    const Rational base = t + l;
    if (base == 0) throw PoleError("reconstruct_eval at pole t = " + to_string(t));
    const Rational inv = Rational(1) / base;
    Rational p = inv;
    for (int i = 1; i <= table.max_order(); ++i, p *= inv) sum += table(l, i) * p;
  }
  return sum;
}

std::map<int, bool> parity_profile(const PartialFractionTable& table) {
  std::map<int, bool> profile;
  for (int i = 1; i <= table.max_order(); ++i) profile[i] = table.column_sum(i) == 0;
  return profile;
}

bool reflection_relation_holds(const PartialFractionTable& table) {
  const int n = table.params().n;
  const int sigma = reflection_sign(table.params());
  for (int l = 0; l <= n; ++l) {
    for (int i = 1; i <= table.max_order(); ++i) {
      const int sign = (i % 2 == 0) ? sigma : -sigma;
      if (table(n - l, i) != Rational(sign) * table(l, i)) return false;
    }
  }
  return true;
}

nlohmann::json to_json(const PartialFractionTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (int l = 0; l < table.pole_count(); ++l) {
    for (int i = 1; i <= table.max_order(); ++i) rows.push_back({{"l", l}, {"i", i}, {"A", to_string(table(l, i))}});
  }
  return rows;
}

}  // namespace zetaforms
