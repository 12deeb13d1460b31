#include "zetaforms/linear_forms.hpp"

#include <numeric>

#include "zetaforms/errors.hpp"

namespace zetaforms {

namespace {

bool surviving(const Params& p, int i) {
  const int sign = (i % 2 == 0) ? 1 : -1;
  return sign == reflection_sign(p);
}

}  // namespace

HurwitzLinearForm extract_form(const PartialFractionTable& table, int j) {
  const Params& p = table.params();
  if (j < 1 || j > p.D) throw DomainError("j must lie in 1..D, got " + std::to_string(j));

  HurwitzLinearForm form;
  form.params = p;
  form.j = j;

  if (table.column_sum(1) != 0) {
    throw ConsistencyError("simple-pole coefficients do not cancel: sum_l A[l][1] = " + to_string(table.column_sum(1)));
  }
  for (int i = 2; i <= table.max_order(); ++i) {
    Rational sum = table.column_sum(i);
    if (!surviving(p, i)) {
      if (sum != 0) {
        throw ConsistencyError("off-parity coefficient sum_l A[l][" + std::to_string(i) + "] = " + to_string(sum));
      }
      continue;
    }
    form.a.emplace(i, std::move(sum));
  }

  // sum_{m>=1} (m+l+alpha)^-i = zeta(i, alpha) - sum_{k=0}^{l} (k+alpha)^-i; for
  // i = 1 the divergent parts cancel because sum_l A[l][1] = 0.
  const Rational alpha = form.alpha();
  Rational a0{0};
  for (int l = 0; l < table.pole_count(); ++l) {
    for (int i = 1; i <= table.max_order(); ++i) {
      const Rational& A = table(l, i);
      if (A == 0) continue;
      Rational partial{0};
      for (int k = 0; k <= l; ++k) partial += power(Rational(k) + alpha, -i);
      a0 -= A * partial;
    }
  }
  form.a0 = std::move(a0);
  return form;
}

std::vector<HurwitzLinearForm> build_forms(const Params& params, ParamPolicy policy) {
  const PartialFractionTable table = decompose(build_R(params, policy));
  std::vector<HurwitzLinearForm> forms;
  for (int j = 1; j <= params.D; ++j) forms.push_back(extract_form(table, j));
  return forms;
}

IntegralityCertificate certify_integrality(const HurwitzLinearForm& form) {
  const Params& p = form.params;
  IntegralityCertificate cert;
  cert.j = form.j;
  cert.d_n = lcm_upto(static_cast<unsigned>(std::max(p.n, 1)));
  cert.d_n_plus_1 = lcm_upto(static_cast<unsigned>(p.n + 1));

  cert.pass = true;
  for (const auto& [i, a] : form.a) {
    const unsigned e = static_cast<unsigned>(p.s + 1 - i);
    IntegralityWitness w;
    w.label = "a_" + std::to_string(i);
    w.scale = "d_" + std::to_string(cert.d_n.n) + "^" + std::to_string(e);
    w.scaled = Rational(power(cert.d_n.value, e)) * a;
    w.integral = is_integer(w.scaled);
    cert.pass = cert.pass && w.integral;
    cert.coefficients.push_back(std::move(w));
  }

  const unsigned e0 = static_cast<unsigned>(p.s + 1);
  cert.a0.label = "a0";
  cert.a0.scale = "d_" + std::to_string(cert.d_n_plus_1.n) + "^" + std::to_string(e0);
  cert.a0.scaled = Rational(power(cert.d_n_plus_1.value, e0)) * form.a0;
  cert.a0.integral = is_integer(cert.a0.scaled);
  cert.pass = cert.pass && cert.a0.integral;

  cert.a0_with_d_n.label = "a0";
  cert.a0_with_d_n.scale = "d_" + std::to_string(cert.d_n.n) + "^" + std::to_string(e0);
  cert.a0_with_d_n.scaled = Rational(power(cert.d_n.value, e0)) * form.a0;
  cert.a0_with_d_n.integral = is_integer(cert.a0_with_d_n.scaled);
  return cert;
}

ZetaLinearForm reduce_to_zeta(std::span<const HurwitzLinearForm> forms, std::span<const Integer> weights) {
  if (forms.empty()) throw DomainError("reduce_to_zeta needs the forms for j = 1..D");
  const Params& p = forms.front().params;
  const int D = p.D;
  if (static_cast<int>(forms.size()) != D) {
    throw DomainError("expected " + std::to_string(D) + " forms, got " + std::to_string(forms.size()));
  }
  if (static_cast<int>(weights.size()) != D) {
    throw DomainError("expected " + std::to_string(D) + " weights, got " + std::to_string(weights.size()));
  }
  for (int j = 1; j <= D; ++j) {
    const auto& f = forms[static_cast<std::size_t>(j - 1)];
    if (f.j != j || !(f.params == p)) throw DomainError("forms must be ordered j = 1..D and share Params");
  }

  // sum_{j : q | j} zeta(i, j/D) = (D/q)^i zeta(i) for each divisor q of D, so
  // a weight vector reduces iff e_j depends only on g = gcd(j, D). Writing
  // E(g) = sum_{q | g} W(q), Moebius inversion gives W(q), the weight of d = D/q.
  std::map<int, Integer> by_gcd;
  std::vector<std::string> residual;
  for (int j = 1; j <= D; ++j) {
    const int g = std::gcd(j, D);
    const Integer& e = weights[static_cast<std::size_t>(j - 1)];
    auto [it, inserted] = by_gcd.emplace(g, e);
    if (!inserted && it->second != e) {
      residual.push_back("zeta(i, " + std::to_string(j) + "/" + std::to_string(D) + ") with weight " + to_string(e) +
                         " vs " + to_string(it->second) + " for gcd " + std::to_string(g));
    }
  }
  if (!residual.empty()) {
    throw IrreducibleCombinationError("weights are not constant on gcd(j, D) classes", std::move(residual));
  }

  auto moebius = [](int m) {
    int result = 1;
    for (int q = 2; q * q <= m; ++q) {
      if (m % q != 0) continue;
      m /= q;
      if (m % q == 0) return 0;
      result = -result;
    }
    return m > 1 ? -result : result;
  };

  ZetaLinearForm out;
  out.params = p;
  out.weights.assign(weights.begin(), weights.end());
  for (const auto& [q, e_q] : by_gcd) {
    (void)e_q;
    Integer W{0};
    for (const auto& [q2, e_q2] : by_gcd) {
      if (q % q2 == 0) W += moebius(q / q2) * e_q2;
    }
    if (W != 0) out.divisor_weights.emplace(D / q, W);
  }

  for (const auto& [i, a] : forms.front().a) {
    Rational factor{0};
    for (const auto& [d, w] : out.divisor_weights) factor += Rational(w) * power(Rational(d), i);
    out.c.emplace(i, factor * a);
  }
  out.c0 = 0;
  for (int j = 1; j <= D; ++j) out.c0 += Rational(weights[static_cast<std::size_t>(j - 1)]) * forms[static_cast<std::size_t>(j - 1)].a0;
  return out;
}

ZetaLinearForm d2_special_form(const Params& params) {
  if (params.D != 2) throw ValidationError("D = 2", "D = " + std::to_string(params.D));
  if (params.s < 5 || params.s % 2 == 0) throw ValidationError("s odd and s >= 5", "s = " + std::to_string(params.s));
  if (params.n < 1) throw ValidationError("n >= 1", "n = " + std::to_string(params.n));
  const auto forms = build_forms(params, ParamPolicy{.allow_odd_n = true});
  const std::vector<Integer> weights{Integer(-1), Integer(7)};
  ZetaLinearForm out = reduce_to_zeta(forms, weights);
  const auto it = out.c.find(3);
  if (it != out.c.end() && it->second != 0) {
    throw ConsistencyError("zeta(3) coefficient of 7 r_{n,2} - r_{n,1} is " + to_string(it->second) + ", expected 0");
  }
  return out;
}

nlohmann::json to_json(const HurwitzLinearForm& form) {
  nlohmann::json a = nlohmann::json::object();
  for (const auto& [i, value] : form.a) a[std::to_string(i)] = to_string(value);
  return {{"j", form.j}, {"alpha", to_string(form.alpha())}, {"a0", to_string(form.a0)}, {"a", a}};
}

namespace {

nlohmann::json witness_json(const IntegralityWitness& w) {
  return {{"coefficient", w.label}, {"scale", w.scale}, {"scaled", to_string(w.scaled)}, {"integral", w.integral}};
}

}  // namespace

nlohmann::json to_json(const IntegralityCertificate& cert) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& w : cert.coefficients) coeffs.push_back(witness_json(w));
  return {{"j", cert.j},
          {"d_n", {{"n", cert.d_n.n}, {"value", to_string(cert.d_n.value)}}},
          {"d_n_plus_1", {{"n", cert.d_n_plus_1.n}, {"value", to_string(cert.d_n_plus_1.value)}}},
          {"coefficients", coeffs},
          {"a0", witness_json(cert.a0)},
          {"a0_with_d_n_informational", witness_json(cert.a0_with_d_n)},
          {"pass", cert.pass}};
}

nlohmann::json to_json(const ZetaLinearForm& form) {
  nlohmann::json c = nlohmann::json::object();
  for (const auto& [i, value] : form.c) c[std::to_string(i)] = to_string(value);
  nlohmann::json weights = nlohmann::json::array();
  for (const auto& e : form.weights) weights.push_back(to_string(e));
  nlohmann::json divisors = nlohmann::json::object();
  for (const auto& [d, w] : form.divisor_weights) divisors[std::to_string(d)] = to_string(w);
  return {{"weights", weights}, {"divisor_weights", divisors}, {"c0", to_string(form.c0)}, {"c", c}};
}

}  // namespace zetaforms
