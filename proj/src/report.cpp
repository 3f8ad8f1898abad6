#include "epalg/report.hpp"

#include <algorithm>
#include <cstdio>
#include <cstring>
#include <sstream>

namespace epalg {

std::string format_float(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12e", v);
  return buf;
}

std::string Residual::to_string() const {
  if (exact_zero) return "0 (exact)";
  return format_float(value);
}

namespace {
const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "FAIL";
    case CheckStatus::Amended:
      return "amended";
  }
  return "?";
}
int status_rank(CheckStatus s) {
  switch (s) {
    case CheckStatus::Fail:
      return 0;
    case CheckStatus::Amended:
      return 1;
    case CheckStatus::Pass:
      return 2;
  }
  return 3;
}
}  // namespace

nlohmann::json report_to_json(const CheckReport& r) {
  nlohmann::json j;
  j["name"] = r.name;
  j["status"] = status_name(r.status);
  if (r.residual.exact_zero)
    j["residual"] = "0 (exact)";
  else
    j["residual"] = format_float(r.residual.value);
  j["details"] = r.details;
  return j;
}

std::string emit_report(std::vector<CheckReport> reports, const RunConfig& cfg) {
  std::stable_sort(reports.begin(), reports.end(), [](const CheckReport& a, const CheckReport& b) {
    if (status_rank(a.status) != status_rank(b.status))
      return status_rank(a.status) < status_rank(b.status);
    return a.name < b.name;
  });
  std::ostringstream os;
  if (cfg.format == "json") {
    nlohmann::json j;
    j["schema"] = "epalg/1";
    j["seed"] = cfg.seed;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(report_to_json(r));
    j["checks"] = std::move(arr);
    bool ok = true;
    for (const auto& r : reports) ok = ok && r.counts_as_pass();
    j["all_pass"] = ok;
    os << j.dump(2) << "\n";
    return os.str();
  }
  if (reports.empty()) return "no checks run\n";
  std::size_t name_w = 4, res_w = 8;
  for (const auto& r : reports) {
    name_w = std::max(name_w, r.name.size());
    res_w = std::max(res_w, r.residual.to_string().size());
  }
  for (const auto& r : reports) {
    os << status_name(r.status);
    for (std::size_t i = std::strlen(status_name(r.status)); i < 8; ++i) os << ' ';
    os << r.name;
    for (std::size_t i = r.name.size(); i < name_w + 2; ++i) os << ' ';
    std::string res = r.residual.to_string();
    os << res;
    if (!r.details.empty()) {
      for (std::size_t i = res.size(); i < res_w + 2; ++i) os << ' ';
      os << r.details;
    }
    os << "\n";
  }
  return os.str();
}

int report_exit_code(const std::vector<CheckReport>& reports) {
  if (reports.empty()) return 1;
  for (const auto& r : reports)
    if (!r.counts_as_pass()) return 2;
  return 0;
}

}  // namespace epalg
