#include "zetaforms/suite.hpp"

#include <chrono>
#include <sstream>

#include "zetaforms/errors.hpp"
#include "zetaforms/linear_forms.hpp"
#include "zetaforms/numerics.hpp"

namespace zetaforms {

namespace {

const std::vector<Params> kFormGrid{{1, 2, 2, 40}, {1, 3, 2, 40}, {1, 4, 4, 40},
                                    {2, 5, 2, 40}, {2, 5, 4, 40}, {3, 8, 2, 40}};

std::string params_label(const Params& p) {
  return "(" + std::to_string(p.D) + "," + std::to_string(p.s) + "," + std::to_string(p.n) + ")";
}

template <class Body>
SuiteLine timed(int criterion, std::string description, Body&& body) {
  SuiteLine line;
  line.criterion = criterion;
  line.description = std::move(description);
  const auto start = std::chrono::steady_clock::now();
  try {
    std::ostringstream detail;
    line.pass = body(detail);
    line.detail = detail.str();
  } catch (const Error& e) {
    line.pass = false;
    line.detail = std::string("exception: ") + e.what();
  }
  line.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return line;
}

}  // namespace

std::vector<SuiteLine> run_suite() {
  std::vector<SuiteLine> lines;

  std::vector<PrecisionValue> direct_values;
  lines.push_back(timed(1, "direct series equals the Hurwitz form to 1e-30", [&](std::ostream& out) {
    bool ok = true;
    for (const Params& p : kFormGrid) {
      const auto forms = build_forms(p);
      for (const auto& form : forms) {
        const PrecisionValue direct = eval_r_direct(p, form.j, 40);
        const PrecisionValue numeric = eval_form_numeric(form, 40);
        WorkingPrecision wp(60);
        const Real residual = abs(direct.value - numeric.value);
        ok = ok && residual <= pow10(-30);
        direct_values.push_back(direct);
        out << params_label(p) << " j=" << form.j << " residual " << to_error_string(residual) << "; ";
      }
    }
    return ok;
  }));

  lines.push_back(timed(2, "integrality certificates", [&](std::ostream& out) {
    bool ok = true;
    for (const Params& p : kFormGrid) {
      for (const auto& form : build_forms(p)) {
        const bool pass = certify_integrality(form).pass;
        ok = ok && pass;
        if (!pass) out << params_label(p) << " j=" << form.j << " FAILED; ";
      }
    }
    out << (ok ? "all coefficients integral after scaling" : "");
    return ok;
  }));

  lines.push_back(timed(3, "simple-pole and off-parity column sums vanish", [&](std::ostream& out) {
    bool ok = true;
    for (const Params& p : kFormGrid) {
      const PartialFractionTable table = decompose(build_R(p));
      ok = ok && table.column_sum(1) == 0;
      for (int i = 2; i <= p.s + 1; ++i) {
        if ((i - p.s) % 2 != 0) ok = ok && table.column_sum(i) == 0;
      }
    }
    out << (ok ? "exact zeros on every grid point" : "nonzero column sum found");
    return ok;
  }));

  lines.push_back(timed(4, "integral representation residual", [&](std::ostream& out) {
    bool ok = true;
    const std::vector<std::pair<Params, double>> grid{{{1, 3, 2, 40}, 1e-10}, {{2, 5, 2, 40}, 1e-10}, {{3, 8, 2, 40}, 1e-8}};
    for (const auto& [p, tol] : grid) {
      const unsigned digits = tol < 1e-9 ? 11 : 9;
      for (int j = 1; j <= p.D; ++j) {
        const Theorem1Check t = verify_theorem1(p, j, digits);
        WorkingPrecision wp(40);
        ok = ok && t.residual <= Real(tol) && t.imaginary <= t.combined_error;
        out << params_label(p) << " j=" << j << " residual " << to_error_string(t.residual) << "; ";
      }
    }
    return ok;
  }));

  lines.push_back(timed(5, "roots-of-unity filter identity", [&](std::ostream& out) {
    bool ok = true;
    const std::vector<Rational> xs{Rational(0), Rational(1, 2), Rational(-1, 3)};
    for (int D : {2, 3}) {
      for (int n : {0, 2}) {
        const Params p{D, 3 * D - 1, n, 40};
        for (int j = 1; j <= D; ++j) {
          for (const Rational& x : xs) {
            const FilterCheck f = roots_filter_check(p, j, x, 25);
            WorkingPrecision wp(40);
            ok = ok && f.residual <= pow10(-20);
          }
        }
      }
    }
    const FilterCheck hand = roots_filter_check({2, 5, 0, 40}, 1, Rational(1, 2), 25);
    WorkingPrecision wp(40);
    const Real hand_error = abs(hand.lhs.value - Real(20) / 9);
    ok = ok && hand_error <= pow10(-20);
    out << "D=2,n=0,j=1,x=1/2 gives 20/9 within " << to_error_string(hand_error);
    return ok;
  }));

  lines.push_back(timed(6, "hypergeometric series matches the direct series", [&](std::ostream& out) {
    bool ok = true;
    for (const Params& p : {Params{1, 3, 2, 40}, Params{2, 5, 2, 40}}) {
      for (int j = 1; j <= p.D; ++j) {
        const PfqCheck c = pfq_cross_check(p, j, 16);
        WorkingPrecision wp(40);
        ok = ok && c.residual <= pow10(-15);
        out << params_label(p) << " j=" << j << " residual " << to_error_string(c.residual) << "; ";
      }
    }
    return ok;
  }));

  lines.push_back(timed(7, "divisor formula for Hurwitz zeta", [&](std::ostream& out) {
    bool ok = true;
    Real worst(0);
    for (int d : {1, 2, 3, 4, 6}) {
      for (int i : {2, 3, 5}) {
        WorkingPrecision wp(60);
        Real lhs(0);
        for (int j = 1; j <= d; ++j) lhs += hurwitz_zeta(i, Rational(j, d), 35).value;
        const Real rhs = boost::multiprecision::pow(Real(d), i) * hurwitz_zeta(i, Rational(1), 35).value;
        const Real diff = abs(lhs - rhs);
        worst = std::max(worst, diff);
        ok = ok && diff <= pow10(-30);
      }
    }
    out << "worst difference " << to_error_string(worst);
    return ok;
  }));

  lines.push_back(timed(8, "7 r_{n,2} - r_{n,1} has no zeta(3) term", [&](std::ostream& out) {
    bool ok = true;
    for (const auto& [s, n] : std::vector<std::pair<int, int>>{{5, 2}, {7, 2}, {5, 4}}) {
      const Params p{2, s, n, 40};
      const ZetaLinearForm z = d2_special_form(p);
      const auto forms = build_forms(p);
      ok = ok && z.c.at(3) == 0 && z.c.at(5) == Rational(8 - 32) * forms.front().a.at(5);
      out << "(s,n)=(" << s << "," << n << ") c3=" << to_string(z.c.at(3)) << "; ";
    }
    return ok;
  }));

  lines.push_back(timed(9, "r_{n,j} positive beyond its error bound", [&](std::ostream& out) {
    bool ok = !direct_values.empty();
    for (const auto& v : direct_values) {
      WorkingPrecision wp(60);
      ok = ok && v.value - v.abs_error > 0;
    }
    out << direct_values.size() << " values checked";
    return ok;
  }));

  return lines;
}

}  // namespace zetaforms
