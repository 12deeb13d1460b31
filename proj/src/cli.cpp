#include "zetaforms/cli.hpp"

#include <chrono>
#include <sstream>

#include <CLI11.hpp>

#include "zetaforms/errors.hpp"
#include "zetaforms/linear_forms.hpp"
#include "zetaforms/numerics.hpp"
#include "zetaforms/partial_fractions.hpp"
#include "zetaforms/suite.hpp"

namespace zetaforms::cli {

using nlohmann::json;

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, sep);) parts.push_back(item);
  return parts;
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Params params_of(const RunConfig& c) { return Params{c.D, c.s, c.n, static_cast<int>(c.digits)}; }

ParamPolicy policy_of(const RunConfig& c) { return ParamPolicy{.allow_odd_n = c.allow_odd_n}; }

void validate_config(const RunConfig& c) {
  validate(params_of(c), policy_of(c));
  if (c.n == 0 && !c.allow_degenerate_n) {
    throw ValidationError("n >= 2 (n = 0 needs --allow-degenerate-n)", "n = 0");
  }
  if (c.j && (*c.j < 1 || *c.j > c.D)) {
    throw ValidationError("1 <= j <= D", "j = " + std::to_string(*c.j));
  }
}

std::vector<int> js_of(const RunConfig& c) {
  if (c.j) return {*c.j};
  std::vector<int> js;
  for (int j = 1; j <= c.D; ++j) js.push_back(j);
  return js;
}

json value_entry(const PrecisionValue& v, unsigned digits) {
  return {{"value", format_value(v.value, digits)}, {"err", to_error_string(v.abs_error)}};
}

struct Builder {
  const RunConfig& config;
  Report report;
  json checks = json::array();

  void check(json entry) {
    report.pass = report.pass && entry.at("pass").get<bool>();
    checks.push_back(std::move(entry));
  }
  void exact_check(const std::string& name, bool pass) { check({{"name", name}, {"pass", pass}, {"exact", true}}); }
  void timed(const std::string& label, const Stopwatch& watch) { report.timings.emplace_back(label, watch.seconds()); }
};

void run_form(Builder& b, json& results) {
  const RunConfig& c = b.config;
  Stopwatch watch;
  const Params p = params_of(c);
  const RationalFunctionRep R = build_R(p, policy_of(c));
  const PartialFractionTable table = decompose(R);

  results["kappa"] = decay_exponent(p);
  results["reflection_sign"] = reflection_sign(p);
  results["prefactor"] = to_string(R.prefactor);
  results["degenerate"] = R.degenerate();
  json profile = json::object();
  for (const auto& [i, vanishes] : parity_profile(table)) profile[std::to_string(i)] = to_string(table.column_sum(i));
  results["column_sums"] = profile;
  if (c.table) results["partial_fractions"] = to_json(table);

  const std::vector<Rational> samples{Rational(3), Rational(7, 2), Rational(22, 7), Rational(1, 3), Rational(-5, 11)};
  auto is_pole = [&](const Rational& t) { return is_integer(t) && t <= 0 && t >= -p.n; };
  std::vector<Rational> usable;
  for (const auto& t : samples) {
    if (!is_pole(t) && !is_pole(Rational(-p.n) - t)) usable.push_back(t);
  }
  b.exact_check("reflection symmetry R(-n-t) = sigma R(t)", check_symmetry(R, usable));
  bool reconstruction = true;
  for (const auto& t : usable) reconstruction = reconstruction && reconstruct_eval(table, t) == eval_R_exact(R, t);
  b.exact_check("partial fractions reconstruct R", reconstruction);
  b.exact_check("sum_l A[l][1] = 0", table.column_sum(1) == 0);
  bool parity = true;
  const int sigma = reflection_sign(p);
  for (int i = 1; i <= table.max_order(); ++i) {
    const bool off_class = (i % 2 == 0 ? 1 : -1) != sigma;
    if (off_class) parity = parity && table.column_sum(i) == 0;
  }
  b.exact_check("off-parity column sums vanish", parity);
  b.exact_check("A[n-l][i] = sigma (-1)^i A[l][i]", reflection_relation_holds(table));

  json forms = json::array();
  json certificates = json::array();
  for (int j : js_of(c)) {
    const HurwitzLinearForm form = extract_form(table, j);
    const IntegralityCertificate cert = certify_integrality(form);
    forms.push_back(to_json(form));
    certificates.push_back(to_json(cert));
    b.exact_check("integrality j=" + std::to_string(j), cert.pass);
  }
  results["forms"] = forms;
  results["certificates"] = certificates;
  b.timed("form", watch);
}

void run_eq1(Builder& b, json& results) {
  const RunConfig& c = b.config;
  const Params p = params_of(c);
  const auto forms = build_forms(p, policy_of(c));
  json rows = json::array();
  for (int j : js_of(c)) {
    Stopwatch watch;
    const PrecisionValue direct = eval_r_direct(p, j, c.digits, policy_of(c));
    const PrecisionValue via_form = eval_form_numeric(forms[static_cast<std::size_t>(j - 1)], c.digits);
    WorkingPrecision wp(working_digits(c.digits, 4));
    const Real residual = abs(direct.value - via_form.value);
    const Real bound = direct.abs_error + via_form.abs_error;
    rows.push_back({{"j", j}, {"direct", value_entry(direct, c.digits)}, {"form", value_entry(via_form, c.digits)}});
    b.check(check_entry("eq1 j=" + std::to_string(j), residual <= bound, residual, bound, c.digits));
    b.check({{"name", "positivity j=" + std::to_string(j)}, {"pass", direct.value - direct.abs_error > 0}});
    b.timed("verify-eq1 j=" + std::to_string(j), watch);
  }
  results["eq1"] = rows;
}

void run_theorem1(Builder& b, json& results) {
  const RunConfig& c = b.config;
  json rows = json::array();
  for (int j : js_of(c)) {
    Stopwatch watch;
    const Theorem1Check t = verify_theorem1(params_of(c), j, c.digits);
    json stars = json::array();
    for (const auto& star : t.stars) {
      stars.push_back({{"m", star.m},
                       {"re", format_value(star.value.value.re, c.digits)},
                       {"im", format_value(star.value.value.im, c.digits)},
                       {"err", to_error_string(star.value.abs_error)},
                       {"terms_used", star.terms_used},
                       {"tail_bound", to_error_string(star.tail_bound)}});
    }
    rows.push_back({{"j", j},
                    {"direct", value_entry(t.direct, c.digits)},
                    {"reconstructed_re", format_value(t.reconstructed.value.re, c.digits)},
                    {"reconstructed_im", format_value(t.reconstructed.value.im, c.digits)},
                    {"reconstructed_err", to_error_string(t.reconstructed.abs_error)},
                    {"stars", stars},
                    {"tail_bound_heuristic", true}});
    json entry = check_entry("theorem1 j=" + std::to_string(j), t.pass, t.residual, t.combined_error, c.digits);
    entry["imaginary"] = to_error_string(t.imaginary);
    b.check(std::move(entry));
    b.timed("verify-theorem1 j=" + std::to_string(j), watch);
  }
  results["theorem1"] = rows;
}

void run_filter(Builder& b, json& results) {
  const RunConfig& c = b.config;
  const std::vector<Rational> xs = c.xs.empty() ? std::vector<Rational>{Rational(0), Rational(1, 2), Rational(-1, 3)} : c.xs;
  json rows = json::array();
  Stopwatch watch;
  for (int j : js_of(c)) {
    for (const Rational& x : xs) {
      const FilterCheck f = roots_filter_check(params_of(c), j, x, c.digits);
      rows.push_back({{"j", j},
                      {"x", to_string(x)},
                      {"lhs", value_entry(f.lhs, c.digits)},
                      {"rhs_re", format_value(f.rhs.value.re, c.digits)},
                      {"rhs_im", format_value(f.rhs.value.im, c.digits)},
                      {"terms_used", f.terms_used}});
      b.check(check_entry("filter j=" + std::to_string(j) + " x=" + to_string(x), f.pass, f.residual, f.combined_error,
                          c.digits));
    }
  }
  b.timed("verify-filter", watch);
  results["filter"] = rows;
}

void run_pfq(Builder& b, json& results) {
  const RunConfig& c = b.config;
  json rows = json::array();
  for (int j : js_of(c)) {
    Stopwatch watch;
    const PfqCheck f = pfq_cross_check(params_of(c), j, c.digits);
    json upper = json::array(), lower = json::array();
    for (const auto& q : f.upper) upper.push_back(to_string(q));
    for (const auto& q : f.lower) lower.push_back(to_string(q));
    rows.push_back({{"j", j},
                    {"upper", upper},
                    {"lower", lower},
                    {"prefactor", to_string(f.prefactor)},
                    {"series", value_entry(f.series, c.digits)},
                    {"value", value_entry(f.value, c.digits)},
                    {"reference", value_entry(f.reference, c.digits)},
                    {"terms_used", f.terms_used},
                    {"tail_bound_heuristic", true}});
    b.check(check_entry("pfq j=" + std::to_string(j), f.pass, f.residual, f.combined_error, c.digits));
    b.timed("verify-pfq j=" + std::to_string(j), watch);
  }
  results["pfq"] = rows;
}

void run_combine(Builder& b, json& results) {
  const RunConfig& c = b.config;
  Stopwatch watch;
  const Params p = params_of(c);
  ZetaLinearForm z;
  if (c.weights.empty()) {
    if (c.D != 2) throw ValidationError("--weights required unless D = 2", "D = " + std::to_string(c.D));
    z = d2_special_form(p);
  } else {
    const auto forms = build_forms(p, policy_of(c));
    z = reduce_to_zeta(forms, c.weights);
  }
  results["zeta_form"] = to_json(z);
  const bool d2_pattern = c.D == 2 && z.weights.size() == 2 && z.weights[0] == -1 && z.weights[1] == 7;
  if (d2_pattern && z.c.count(3)) b.exact_check("zeta(3) coefficient vanishes", z.c.at(3) == 0);
  b.timed("combine", watch);
}

void run_growth(Builder& b, json& results) {
  const RunConfig& c = b.config;
  std::vector<Params> list;
  for (int n : c.ns.empty() ? std::vector<int>{c.n} : c.ns) {
    Params p{c.D, c.s, n, static_cast<int>(c.digits)};
    validate(p, policy_of(c));
    list.push_back(p);
  }
  json rows = json::array();
  for (int j : js_of(c)) {
    Stopwatch watch;
    for (const GrowthRow& row : growth_report(list, j, c.digits)) {
      rows.push_back({{"j", j},
                      {"n", row.n},
                      {"r", value_entry(row.r, c.digits)},
                      {"r_pow_1_over_n", format_value(row.nth_root, 20)},
                      {"positive", row.positive}});
      b.check({{"name", "positivity j=" + std::to_string(j) + " n=" + std::to_string(row.n)}, {"pass", row.positive}});
    }
    b.timed("growth j=" + std::to_string(j), watch);
  }
  results["growth"] = rows;
}

void run_suite_command(Builder& b, json& results) {
  json lines = json::array();
  for (const SuiteLine& line : run_suite()) {
    lines.push_back({{"criterion", line.criterion}, {"description", line.description}, {"detail", line.detail}});
    b.check({{"name", "criterion " + std::to_string(line.criterion) + ": " + line.description}, {"pass", line.pass}});
    b.report.timings.emplace_back("criterion " + std::to_string(line.criterion), line.seconds);
  }
  results["suite"] = lines;
}

}  // namespace

RunConfig parse_args(int argc, const char* const* argv) {
  CLI::App app{"Hypergeometric linear forms in Hurwitz zeta values: exact forms, certificates and numerical checks"};
  RunConfig config;
  std::string format = "text";
  std::string weights, ns, xs;
  bool json_flag = false;
  int j = 0;

  app.add_option("command", config.command, "form | verify-eq1 | verify-theorem1 | verify-filter | verify-pfq | combine | growth | all | suite")
      ->required()
      ->check(CLI::IsMember(commands()));
  app.add_option("--D", config.D, "root-of-unity degree D >= 1");
  app.add_option("--s", config.s, "exponent s >= 3D-1");
  app.add_option("--n", config.n, "even n >= 2");
  app.add_option("--j", j, "single j in 1..D (default: all)");
  app.add_option("--digits", config.digits, "target decimal digits")->check(CLI::Range(10U, 2000U));
  app.add_option("--weights", weights, "comma-separated integer weights e_1..e_D for combine");
  app.add_option("--ns", ns, "comma-separated n values for growth");
  app.add_option("--x", xs, "comma-separated rational points for verify-filter");
  app.add_option("--format", format, "text | json | csv")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_flag("--json", json_flag, "shorthand for --format json");
  app.add_flag("--allow-odd-n", config.allow_odd_n, "admit odd n (D = 2 only)");
  app.add_flag("--allow-degenerate-n", config.allow_degenerate_n, "admit n = 0");
  app.add_flag("--timings", config.timings, "include timings in JSON output");
  app.add_flag("--table", config.table, "include the partial-fraction table (form)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    throw ParseExit{app.exit(e)};
  }

  if (j != 0) config.j = j;
  config.format = json_flag ? OutputFormat::json
                 : format == "json" ? OutputFormat::json
                 : format == "csv"  ? OutputFormat::csv
                                    : OutputFormat::text;
  for (const auto& w : split(weights, ',')) {
    const Rational q = parse_rational(w);
    if (!is_integer(q)) throw DomainError("weights must be integers, got '" + w + "'");
    config.weights.push_back(numerator(q));
  }
  for (const auto& item : split(ns, ',')) config.ns.push_back(std::stoi(item));
  for (const auto& item : split(xs, ',')) config.xs.push_back(parse_rational(item));
  return config;
}

Report run(const RunConfig& config) {
  Builder b{config, Report{}, json::array()};
  if (config.command != "suite") {
    validate_config(config);
    for (int n : config.ns) {
      Params p = params_of(config);
      p.n = n;
      validate(p, policy_of(config));
    }
  }

  json results = json::object();
  const std::string& cmd = config.command;
  const bool degenerate = config.n == 0;
  if (cmd == "form" || cmd == "all") run_form(b, results);
  if (cmd == "verify-eq1" || cmd == "all") run_eq1(b, results);
  if (cmd == "verify-theorem1" || (cmd == "all" && !degenerate)) run_theorem1(b, results);
  if (cmd == "verify-filter" || cmd == "all") run_filter(b, results);
  if (cmd == "verify-pfq" || cmd == "all") run_pfq(b, results);
  if (cmd == "combine" || (cmd == "all" && config.D == 2 && config.s % 2 == 1 && config.s >= 5)) run_combine(b, results);
  if (cmd == "growth") run_growth(b, results);
  if (cmd == "suite") run_suite_command(b, results);

  json cfg = {{"D", config.D}, {"s", config.s}, {"n", config.n}, {"digits", config.digits}};
  cfg["j"] = config.j ? json(*config.j) : json("all");
  if (!config.weights.empty()) {
    json w = json::array();
    for (const auto& e : config.weights) w.push_back(to_string(e));
    cfg["weights"] = w;
  }
  if (!config.ns.empty()) cfg["ns"] = config.ns;
  if (!config.xs.empty()) {
    json x = json::array();
    for (const auto& q : config.xs) x.push_back(to_string(q));
    cfg["x"] = x;
  }
  cfg["allow_odd_n"] = config.allow_odd_n;
  cfg["allow_degenerate_n"] = config.allow_degenerate_n;

  b.report.data = {{"schema", "zetaforms/1"},
                   {"command", config.command},
                   {"config", cfg},
                   {"results", results},
                   {"checks", b.checks},
                   {"pass", b.report.pass}};
  if (config.timings) {
    json t = json::array();
    for (const auto& [label, seconds] : b.report.timings) t.push_back({{"label", label}, {"seconds", seconds}});
    b.report.data["timings"] = t;
  }
  return b.report;
}

}  // namespace zetaforms::cli
