#include <sstream>

#include "zetaforms/cli.hpp"

namespace zetaforms::cli {

using nlohmann::json;

std::string format_value(const Real& value, unsigned digits) { return to_decimal(value, digits + 3); }

json check_entry(const std::string& name, bool pass, const Real& residual, const Real& error_bound, unsigned digits) {
  (void)digits;
  return {{"name", name}, {"pass", pass}, {"residual", to_error_string(residual)}, {"err", to_error_string(error_bound)}};
}

namespace {

std::string scalar(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

void render_text_results(std::ostream& out, const json& results) {
  if (results.contains("forms")) {
    out << "kappa = " << results["kappa"] << ", reflection sign = " << results["reflection_sign"]
        << ", prefactor = " << scalar(results["prefactor"]) << "\n";
    for (const auto& f : results["forms"]) {
      out << "j = " << f["j"] << ":  a0 = " << scalar(f["a0"]) << "\n";
      for (const auto& [i, a] : f["a"].items()) out << "        a" << i << " = " << scalar(a) << "\n";
    }
    for (const auto& c : results["certificates"]) {
      out << "certificate j = " << c["j"] << ": " << (c["pass"].get<bool>() ? "pass" : "FAIL") << "\n";
      for (const auto& w : c["coefficients"]) {
        out << "    " << scalar(w["scale"]) << " * " << scalar(w["coefficient"]) << " = " << scalar(w["scaled"]) << "\n";
      }
      out << "    " << scalar(c["a0"]["scale"]) << " * a0 = " << scalar(c["a0"]["scaled"]) << "\n";
    }
  }
  if (results.contains("eq1")) {
    for (const auto& r : results["eq1"]) {
      out << "r_{n," << r["j"] << "} direct = " << scalar(r["direct"]["value"]) << "  (err " << scalar(r["direct"]["err"])
          << ")\n"
          << "          form   = " << scalar(r["form"]["value"]) << "  (err " << scalar(r["form"]["err"]) << ")\n";
    }
  }
  if (results.contains("theorem1")) {
    for (const auto& r : results["theorem1"]) {
      out << "theorem1 j = " << r["j"] << ": direct = " << scalar(r["direct"]["value"])
          << "\n              integral side = " << scalar(r["reconstructed_re"]) << " + i " << scalar(r["reconstructed_im"])
          << "\n";
      for (const auto& st : r["stars"]) {
        out << "    r*_m, m = " << st["m"] << ": terms " << st["terms_used"] << ", tail bound " << scalar(st["tail_bound"])
            << "\n";
      }
    }
  }
  if (results.contains("pfq")) {
    for (const auto& r : results["pfq"]) {
      out << "pFq j = " << r["j"] << ": " << scalar(r["value"]["value"]) << " vs " << scalar(r["reference"]["value"])
          << " (" << r["terms_used"] << " terms)\n";
    }
  }
  if (results.contains("zeta_form")) {
    const auto& z = results["zeta_form"];
    out << "c0 = " << scalar(z["c0"]) << "\n";
    for (const auto& [i, c] : z["c"].items()) out << "c" << i << " = " << scalar(c) << "\n";
  }
  if (results.contains("growth")) {
    for (const auto& r : results["growth"]) {
      out << "j = " << r["j"] << " n = " << r["n"] << ": r = " << scalar(r["r"]["value"])
          << "  r^(1/n) = " << scalar(r["r_pow_1_over_n"]) << "\n";
    }
  }
  if (results.contains("suite")) {
    for (const auto& line : results["suite"]) {
      out << "criterion " << line["criterion"] << ": " << scalar(line["description"]) << "\n    " << scalar(line["detail"])
          << "\n";
    }
  }
}

}  // namespace

std::string render(const Report& report, OutputFormat format) {
  const json& d = report.data;
  std::ostringstream out;
  switch (format) {
    case OutputFormat::json:
      out << d.dump(2) << "\n";
      break;
    case OutputFormat::csv: {
      out << "record,name,value,err,pass\n";
      const json& results = d["results"];
      if (results.contains("forms")) {
        for (const auto& f : results["forms"]) {
          const std::string j = std::to_string(f["j"].get<int>());
          out << "coefficient,a0 j=" << j << "," << scalar(f["a0"]) << ",0,\n";
          for (const auto& [i, a] : f["a"].items()) out << "coefficient,a" << i << "," << scalar(a) << ",0,\n";
        }
      }
      if (results.contains("zeta_form")) {
        const auto& z = results["zeta_form"];
        out << "coefficient,c0," << scalar(z["c0"]) << ",0,\n";
        for (const auto& [i, c] : z["c"].items()) out << "coefficient,c" << i << "," << scalar(c) << ",0,\n";
      }
      for (const auto& c : d["checks"]) {
        out << "check," << csv_field(scalar(c["name"])) << "," << (c.contains("residual") ? scalar(c["residual"]) : "")
            << "," << (c.contains("err") ? scalar(c["err"]) : "") << "," << (c["pass"].get<bool>() ? "true" : "false")
            << "\n";
      }
      break;
    }
    case OutputFormat::text: {
      const json& cfg = d["config"];
      out << "zetaforms " << scalar(d["command"]) << "  D=" << cfg["D"] << " s=" << cfg["s"] << " n=" << cfg["n"]
          << " digits=" << cfg["digits"] << "\n";
      render_text_results(out, d["results"]);
      for (const auto& c : d["checks"]) {
        out << (c["pass"].get<bool>() ? "[PASS] " : "[FAIL] ") << scalar(c["name"]);
        if (c.contains("residual")) out << "  residual " << scalar(c["residual"]) << " <= err " << scalar(c["err"]);
        out << "\n";
      }
      for (const auto& [label, seconds] : report.timings) {
        std::ostringstream t;
        t.imbue(std::locale::classic());
        t.precision(3);
        t << std::fixed << seconds;
        out << "time " << label << ": " << t.str() << " s\n";
      }
      out << (report.pass ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
      break;
    }
  }
  return out.str();
}

}  // namespace zetaforms::cli
