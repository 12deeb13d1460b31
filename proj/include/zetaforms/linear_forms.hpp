#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "zetaforms/partial_fractions.hpp"

namespace zetaforms {

/**
 * r_{n,j} = a0 + sum_i a_i zeta(i, j/D), exactly.
 *
 * Keys of `a` run over 2 <= i <= s in the surviving parity class ((-1)^i equal
 * to the reflection sign, i.e. i = s mod 2 when n is even). The simple-pole
 * and off-parity coefficients vanish identically and are not stored.
 */
struct HurwitzLinearForm {
  Params params;
  int j = 1;
  Rational a0;
  std::map<int, Rational> a;

  Rational alpha() const { return Rational(j, params.D); }
};

// Throws ConsistencyError if sum_l A[l][1] or any off-parity column sum is nonzero.
HurwitzLinearForm extract_form(const PartialFractionTable& table, int j);

// Convenience: build, decompose and extract for j = 1..D.
std::vector<HurwitzLinearForm> build_forms(const Params& params, ParamPolicy policy = {});

struct IntegralityWitness {
  std::string label;  // "a_3", "a0"
  std::string scale;  // "d_2^3", ...
  Rational scaled;    // scale * coefficient
  bool integral = false;
};

struct IntegralityCertificate {
  LcmValue d_n;      // d_max(n,1) (n = 0 uses d_1)
  LcmValue d_n_plus_1;
  int j = 1;
  std::vector<IntegralityWitness> coefficients;  // d_n^{s+1-i} a_i
  IntegralityWitness a0;                         // d_{n+1}^{s+1} a_{0,j}
  IntegralityWitness a0_with_d_n;                // d_n^{s+1} a_{0,j}: informational, not gated
  bool pass = false;
};

// Exact divisibility checks; failures are reported in the certificate, never thrown.
IntegralityCertificate certify_integrality(const HurwitzLinearForm& form);

/// c0 + sum_i c_i zeta(i), obtained from sum_j e_j r_{n,j}.
struct ZetaLinearForm {
  Params params;
  Rational c0;
  std::map<int, Rational> c;
  std::vector<Integer> weights;             // e_1..e_D
  std::map<int, Integer> divisor_weights;   // d -> w_d with e = sum_d w_d 1[(D/d) | j]
};

// Reduces via sum_{j=1}^{d} zeta(i, j/d) = d^i zeta(i). Throws
// IrreducibleCombinationError when e_j is not a function of gcd(j, D).
ZetaLinearForm reduce_to_zeta(std::span<const HurwitzLinearForm> forms, std::span<const Integer> weights);

// 7 r_{n,2} - r_{n,1} for D = 2, odd s >= 5 (any n >= 1, odd allowed).
// Throws ConsistencyError if the zeta(3) coefficient is not exactly zero.
ZetaLinearForm d2_special_form(const Params& params);

nlohmann::json to_json(const HurwitzLinearForm& form);
nlohmann::json to_json(const IntegralityCertificate& cert);
nlohmann::json to_json(const ZetaLinearForm& form);

}  // namespace zetaforms
