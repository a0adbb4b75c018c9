#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

#ifndef HS_CLI_PATH
#define HS_CLI_PATH "hyperseries"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::string& args) {
  std::string out_path = "cli_test_stdout.tmp";
  std::string err_path = "cli_test_stderr.tmp";
  std::string cmd = std::string(HS_CLI_PATH) + " " + args + " >" + out_path +
                    " 2>" + err_path;
  int status = std::system(cmd.c_str());
  auto slurp = [](const std::string& p) {
    std::ifstream f(p);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
  };
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return r;
}

}  // namespace

TEST_CASE("cli eval") {
  SUBCASE("trivial value at the origin") {
    RunResult r = run_cli("eval --pfq 2F1 --upper 1,1 --lower 2 --x 0");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["value"]["re"].get<double>() == 1.0);
    CHECK(j["converged"].get<bool>());
  }
  SUBCASE("3F2 sample") {
    RunResult r =
        run_cli("eval --pfq 3F2 --upper 0.3,0.7,1.1 --lower 1.9,2.3 --x 0.4");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.contains("value"));
    CHECK(j.contains("terms_used"));
    CHECK(j.contains("tail_estimate"));
    CHECK(j["value"]["re"].get<double>() == doctest::Approx(1.0235872311).epsilon(1e-6));
  }
  SUBCASE("label mismatch is a parameter error") {
    RunResult r = run_cli("eval --pfq 2F1 --upper 1,1,1 --lower 2 --x 0.1");
    CHECK(r.exit_code == 2);
    auto j = nlohmann::json::parse(r.err);
    CHECK(j["code"].get<int>() == 2);
    CHECK(j.contains("offending_parameter"));
  }
  SUBCASE("domain error carries the structured object") {
    RunResult r = run_cli("eval --upper 1,1 --lower 2 --x 2.0");
    CHECK(r.exit_code == 2);
    auto j = nlohmann::json::parse(r.err);
    CHECK(j["code"].get<int>() == 2);
  }
}

TEST_CASE("cli check") {
  SUBCASE("exact functional identity") {
    RunResult r =
        run_cli("check --identity eq31 --order 12 --params \"1/3,1/2,3/4;5/4,7/6\"");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["pass"].get<bool>());
    CHECK(j["diff"].get<std::string>() == "0");
  }
  SUBCASE("variant report for the slipped expansion") {
    RunResult r =
        run_cli("check --identity eq42 --order 10 --params \"1/3,1/2,3/4;5/4,7/6\"");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.contains("variants"));
    int passing = 0;
    for (auto& v : j["variants"]) passing += v["pass"].get<bool>() ? 1 : 0;
    CHECK(passing == 1);
  }
  SUBCASE("decimal parameters are rejected for exact checks") {
    RunResult r = run_cli("check --identity eq31 --order 8 --params \"0.3,0.5,0.7;1.2,1.4\"");
    CHECK(r.exit_code == 2);
  }
}

TEST_CASE("cli table") {
  std::string args =
      "table --upper 0.2,0.45,3.3 --lower 2.15,4.1 --from -2 --to 0.5 --step 0.5 "
      "--tol 1e-8";
  RunResult r1 = run_cli(args);
  REQUIRE(r1.exit_code == 0);
  SUBCASE("deterministic output") {
    RunResult r2 = run_cli(args);
    CHECK(r1.out == r2.out);
  }
  SUBCASE("header, row count, and method switching") {
    std::istringstream ss(r1.out);
    std::string line;
    std::getline(ss, line);
    CHECK(line == "x,re,im,method,residual_direct,residual_quad1d,error");
    int rows = 0;
    bool saw_direct = false, saw_continuation = false;
    while (std::getline(ss, line)) {
      ++rows;
      if (line.find(",direct,") != std::string::npos) saw_direct = true;
      if (line.find(",eq53,") != std::string::npos ||
          line.find(",eq52,") != std::string::npos ||
          line.find(",expansion,") != std::string::npos)
        saw_continuation = true;
    }
    CHECK(rows == 6);
    CHECK(saw_direct);
    CHECK(saw_continuation);
  }
  SUBCASE("empty range gives the bare header") {
    RunResult r = run_cli(
        "table --upper 0.2,0.45,3.3 --lower 2.15,4.1 --from 1 --to 0 --step 0.5");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "x,re,im,method,residual_direct,residual_quad1d,error\n");
  }
  SUBCASE("per-row errors keep the sweep alive") {
    RunResult r = run_cli(
        "table --upper 0.2,0.45,3.3 --lower 2.15,4.1 --from 0.5 --to 1.5 --step 0.5 "
        "--tol 1e-8");
    CHECK(r.exit_code == 0);
    std::istringstream ss(r.out);
    std::string line;
    bool saw_error_row = false;
    while (std::getline(ss, line))
      if (line.find("branch") != std::string::npos) saw_error_row = true;
    CHECK(saw_error_row);
  }
}

TEST_CASE("cli continue and oracle cross-check") {
  RunResult c = run_cli(
      "continue --upper 0.2,0.45,3.3 --lower 2.15,4.1 --x -3 --formula eq52 "
      "--tol 1e-8");
  REQUIRE(c.exit_code == 0);
  auto jc = nlohmann::json::parse(c.out);
  RunResult o = run_cli("oracle --rep 1d --upper 0.2,0.45,3.3 --lower 2.15,4.1 "
                        "--x -3 --nodes 60");
  REQUIRE(o.exit_code == 0);
  auto jo = nlohmann::json::parse(o.out);
  double diff = std::abs(jc["value"]["re"].get<double>() -
                         jo["value"]["re"].get<double>());
  CHECK(diff < 1e-5);
  CHECK(jc["method"].get<std::string>() == "eq52");
}

TEST_CASE("cli exit code for non-convergent requests") {
  // boundary pair whose monitor refuses: flagship-style spec via eq53
  RunResult r = run_cli(
      "continue --upper 0.2,0.5,0.3 --lower 2.5,3.1 --x -0.9 --formula eq53 "
      "--tol 1e-9");
  CHECK(r.exit_code == 3);
  auto j = nlohmann::json::parse(r.err);
  CHECK(j["code"].get<int>() == 3);
}
