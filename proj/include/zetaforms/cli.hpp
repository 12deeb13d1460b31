#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "zetaforms/core_arith.hpp"
#include "zetaforms/precision.hpp"

namespace zetaforms::cli {

enum class OutputFormat { text, json, csv };

struct RunConfig {
  std::string command;
  int D = 1;
  int s = 2;
  int n = 2;
  std::optional<int> j;          // all j when empty
  std::vector<Integer> weights;  // combine
  std::vector<int> ns;           // growth; defaults to {n}
  std::vector<Rational> xs;      // verify-filter; defaults to {0, 1/2, -1/3}
  unsigned digits = 40;
  OutputFormat format = OutputFormat::text;
  bool allow_odd_n = false;
  bool allow_degenerate_n = false;
  bool timings = false;
  bool table = false;            // include the partial-fraction table in `form`
};

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> names{"form",    "verify-eq1", "verify-theorem1", "verify-filter",
                                              "verify-pfq", "combine", "growth", "all", "suite"};
  return names;
}

// Raised after CLI11 has printed help or a parse error; carries the exit code.
struct ParseExit {
  int code = 0;
};

// Throws ParseExit for --help and malformed arguments, DomainError for bad
// rational or integer lists.
RunConfig parse_args(int argc, const char* const* argv);

struct Report {
  nlohmann::json data;  // schema "zetaforms/1"
  std::vector<std::pair<std::string, double>> timings;  // seconds
  bool pass = true;
};

// Throws ValidationError for parameters violating the invariants.
Report run(const RunConfig& config);

std::string render(const Report& report, OutputFormat format);

// Exit status: 0 iff every check passed.
inline int exit_status(const Report& report) { return report.pass ? 0 : 1; }

// Helpers shared by the report builders.
std::string format_value(const Real& value, unsigned digits);
nlohmann::json check_entry(const std::string& name, bool pass, const Real& residual, const Real& error_bound,
                           unsigned digits);

}  // namespace zetaforms::cli
