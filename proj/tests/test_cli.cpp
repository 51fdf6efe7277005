#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "sv/report.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

RunResult run(const std::string& args) {
  const std::string out = "/tmp/sv_cli_out.txt";
  const std::string err = "/tmp/sv_cli_err.txt";
  const std::string cmd =
      std::string(SIMONS_VERIFY_BIN) + " " + args + " >" + out + " 2>" + err;
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

}  // namespace

TEST_CASE("verify subcommand reports all residuals and exits zero") {
  const auto r =
      run("verify --degree 2 --samples 50 --seed 42 --tol 1e-8 --format json");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["pass"] == true);
  CHECK(j["per_degree"]["2"]["residuals"].contains("REFINED"));
  CHECK(j["per_degree"]["2"]["residuals"].size() == 27);
  CHECK(j["per_degree"]["2"]["invariants"]["S"].get<double>() ==
        doctest::Approx(4.0 / 3.0).epsilon(1e-9));
  CHECK(j["catalog"].contains("SIMONS"));
}

TEST_CASE("gap subcommand prints the critical point at 8 decimals") {
  const auto r = run("gap --format json");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["gap"]["s_star_printed"] == "1.72935007");
  CHECK(j["gap"]["forbidden_printed"][0] == "1.72936");
  CHECK(j["gap"]["forbidden_printed"][1] == "1.73355");
  CHECK(j["gap"]["endpoints"]["exact_zero"] == true);
}

TEST_CASE("algebra subcommand certifies all six identities") {
  const auto r = run("algebra --format json");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["algebra"]["certified"].size() == 6);
  for (const auto& [name, ok] : j["algebra"]["certified"].items()) {
    CAPTURE(name);
    CHECK(ok == true);
  }
  CHECK(j["algebra"]["pinch"]["max_lhs"].get<double>() <= 1e-12);
}

TEST_CASE("reports are byte-identical across runs") {
  const std::string args =
      "verify --degree 2 --degree 3 --samples 25 --seed 7 --format json";
  const auto a = run(args);
  const auto b = run(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  // A different seed changes sampling but not correctness.
  const auto c = run(
      "verify --degree 2 --degree 3 --samples 25 --seed 8 --format json");
  CHECK(c.exit_code == 0);
}

TEST_CASE("impossible tolerance exits 1 and names the failing check") {
  const auto r = run("verify --degree 3 --samples 10 --tol 1e-30");
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("FAIL:") != std::string::npos);
  CHECK(r.err.find("verify/") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("frobnicate").exit_code == 2);
  CHECK(run("verify --degree 7 --samples 5").exit_code == 2);
  CHECK(run("verify --format yaml").exit_code == 2);
  CHECK(run("").exit_code == 2);
}

TEST_CASE("config file supplies defaults, flags win") {
  {
    std::ofstream f("/tmp/sv_cli_cfg.ini");
    f << "samples=12\nseed=5\ndegree=2\n";
  }
  const auto r = run("verify --config /tmp/sv_cli_cfg.ini --seed 9 --format json");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["config"]["samples"] == 12);
  CHECK(j["config"]["seed"] == 9);
  CHECK(j["config"]["degrees"][0] == 2);
}

TEST_CASE("quadrature rule CSV export") {
  const auto r = run(
      "integrate --degree 2 --quad-order 8 --export-rule /tmp/sv_rule.csv "
      "--format json");
  CHECK(r.exit_code == 0);
  const std::string csv = slurp("/tmp/sv_rule.csv");
  CHECK(csv.rfind("chart,u,v,weight\n", 0) == 0);
  int lines = 0;
  for (char ch : csv)
    if (ch == '\n') ++lines;
  CHECK(lines == 1 + 8 * 16);
}

TEST_CASE("text and csv formats render") {
  const auto t = run("gap --format text");
  CHECK(t.exit_code == 0);
  CHECK(t.out.find("s_star") != std::string::npos);
  const auto c = run("gap --format csv");
  CHECK(c.exit_code == 0);
  CHECK(c.out.rfind("section,key,value\n", 0) == 0);
}

TEST_CASE("integrate reports are identical across thread counts") {
  const std::string args =
      "integrate --degree 2 --quad-order 8 --format json";
  setenv("SIMONS_VERIFY_THREADS", "1", 1);
  const auto a = run(args);
  setenv("SIMONS_VERIFY_THREADS", "2", 1);
  const auto b = run(args);
  unsetenv("SIMONS_VERIFY_THREADS");
  const auto c = run(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
}

TEST_CASE("all subcommand aggregates every section") {
  const auto r = run("all --degree 1 --samples 10 --quad-order 8 --format json");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.contains("per_degree"));
  CHECK(j.contains("gap"));
  CHECK(j.contains("algebra"));
  CHECK(j["per_degree"]["1"].contains("residuals"));
  CHECK(j["per_degree"]["1"].contains("integrals"));
  CHECK(j["pass"] == true);
}

TEST_CASE("render_report formats are deterministic in-process") {
  sv::RunConfig cfg;
  cfg.degrees = {2};
  cfg.samples = 10;
  const auto a = sv::run_verify(cfg);
  const auto b = sv::run_verify(cfg);
  CHECK(sv::render_report(a.report, "json") ==
        sv::render_report(b.report, "json"));
  CHECK(sv::render_report(a.report, "text") ==
        sv::render_report(b.report, "text"));
}
