#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

namespace epalg {

/// Residual of a check: exact zero is distinguished from a small float so
/// exact checks cannot silently degrade to tolerance checks.
struct Residual {
  bool exact_zero = true;
  double value = 0.0;

  static Residual exact() { return {true, 0.0}; }
  static Residual of(double v) { return {false, v}; }
  std::string to_string() const;
};

enum class CheckStatus { Pass, Fail, Amended };

struct CheckReport {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  Residual residual;
  std::string details;

  bool counts_as_pass() const { return status != CheckStatus::Fail; }
};

struct RunConfig {
  std::string format = "table";  // table | json | csv
  unsigned seed = 0;
  std::optional<double> tolerance_override;
};

/// Stable serialization: failures first, then amended, then passes, each
/// group in name order. JSON carries "schema": "epalg/1".
std::string emit_report(std::vector<CheckReport> reports, const RunConfig& cfg);
nlohmann::json report_to_json(const CheckReport& r);

/// Exit status per the CLI contract: 0 all pass, 2 verification failure.
int report_exit_code(const std::vector<CheckReport>& reports);

/// Fixed float formatting (%.12e) used for all numeric output.
std::string format_float(double v);

}  // namespace epalg
