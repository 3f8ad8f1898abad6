#include <doctest.h>

#include "epalg/report.hpp"

using namespace epalg;

TEST_CASE("report ordering, exit codes, residual formatting") {
  RunConfig cfg;

  SUBCASE("empty list") {
    CHECK(emit_report({}, cfg) == "no checks run\n");
    CHECK(report_exit_code({}) == 1);
  }

  SUBCASE("single pass") {
    CheckReport r{"alpha", CheckStatus::Pass, Residual::exact(), ""};
    CHECK(report_exit_code({r}) == 0);
    std::string table = emit_report({r}, cfg);
    CHECK(table.find("alpha") != std::string::npos);
    CHECK(table.find("0 (exact)") != std::string::npos);
    RunConfig jcfg;
    jcfg.format = "json";
    nlohmann::json j = nlohmann::json::parse(emit_report({r}, jcfg));
    CHECK(j.at("checks").size() == 1);
    CHECK(j.at("all_pass") == true);
    CHECK(j.at("schema") == "epalg/1");
  }

  SUBCASE("mixed: failures first, amended counts as pass, exit 2") {
    std::vector<CheckReport> rs{
        {"zeta-pass", CheckStatus::Pass, Residual::exact(), ""},
        {"beta-fail", CheckStatus::Fail, Residual::of(3.2e-3), "boom"},
        {"alpha-amended", CheckStatus::Amended, Residual::exact(), "see MANIFEST"},
    };
    CHECK(report_exit_code(rs) == 2);
    std::string table = emit_report(rs, cfg);
    std::size_t fail_pos = table.find("beta-fail");
    std::size_t amended_pos = table.find("alpha-amended");
    std::size_t pass_pos = table.find("zeta-pass");
    CHECK(fail_pos < amended_pos);
    CHECK(amended_pos < pass_pos);
    CHECK(table.find("3.200000000000e-03") != std::string::npos);

    rs.erase(rs.begin() + 1);
    CHECK(report_exit_code(rs) == 0);  // amended alone still passes
  }

  SUBCASE("exact zero never prints as a float") {
    CHECK(Residual::exact().to_string() == "0 (exact)");
    CHECK(Residual::of(0.0).to_string() == "0.000000000000e+00");
    CHECK(Residual::of(3.2e-14).to_string() == "3.200000000000e-14");
  }
}
