// Command-line front end: orchestrates verification runs over the standard
// minimal spheres and emits machine-readable reports.
//
// Subcommands:
//   verify     pointwise identity suite per degree
//   integrate  quadrature identities, Gauss-Bonnet, Bochner, gradient bound
//   gap        pinching-gap analysis and forbidden interval
//   algebra    exact polynomial certificates and the pinching inequality
//   all        everything above in one report
//
// Exit codes: 0 all checks pass, 1 a check failed (first failure named on
// stderr), 2 usage or configuration error.

#include <cstdio>
#include <fstream>
#include <sstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "sv/report.hpp"

namespace {

struct CliOptions {
  sv::RunConfig cfg;
  std::string config_file;
  std::string export_rule;  // integrate: write the quadrature rule CSV here
  std::string output;       // write the report here instead of stdout
};

void add_common_flags(CLI::App* cmd, CliOptions& opt) {
  cmd->add_option("--degree", opt.cfg.degrees,
                  "Immersion degrees to test (1..6)")
      ->delimiter(',');
  cmd->add_option("--samples", opt.cfg.samples, "Sample points per degree");
  cmd->add_option("--quad-order", opt.cfg.quad_order,
                  "Gauss-Legendre order n (n x 2n nodes)");
  cmd->add_option("--tol", opt.cfg.tol_pointwise,
                  "Base pointwise tolerance (scales the catalog)");
  cmd->add_option("--tol-integral", opt.cfg.tol_integral,
                  "Relative tolerance for integral identities");
  cmd->add_option("--seed", opt.cfg.seed, "Sampling seed");
  cmd->add_option("--format", opt.cfg.format, "Report format: json|csv|text");
  cmd->add_option("--precision", opt.cfg.precision,
                  "Arithmetic: double|extended");
  cmd->add_option("--output", opt.output, "Write the report to a file");
  cmd->add_option("--config", opt.config_file,
                  "Optional key=value config file mirroring the flags; "
                  "flags win over the file");
}

// key=value lines, one per flag; '#' starts a comment. A key only applies
// when the matching flag was not given on the command line.
void apply_config_file(CLI::App* cmd, CliOptions& opt) {
  std::ifstream f(opt.config_file);
  if (!f)
    throw std::invalid_argument("config: cannot read " + opt.config_file);
  std::string line;
  while (std::getline(f, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) continue;
    std::string flag;
    if (key == "degree" || key == "degrees") flag = "--degree";
    else if (key == "samples") flag = "--samples";
    else if (key == "quad-order" || key == "quad_order") flag = "--quad-order";
    else if (key == "tol") flag = "--tol";
    else if (key == "tol-integral" || key == "tol_integral")
      flag = "--tol-integral";
    else if (key == "seed") flag = "--seed";
    else if (key == "format") flag = "--format";
    else if (key == "precision") flag = "--precision";
    else throw std::invalid_argument("config: unknown key " + key);
    if (cmd->count(flag) > 0) continue;  // command-line flag wins
    if (flag == "--degree") {
      opt.cfg.degrees.clear();
      std::istringstream ss(value);
      std::string item;
      while (std::getline(ss, item, ','))
        opt.cfg.degrees.push_back(std::stoi(item));
    } else if (flag == "--samples") {
      opt.cfg.samples = std::stoi(value);
    } else if (flag == "--quad-order") {
      opt.cfg.quad_order = std::stoi(value);
    } else if (flag == "--tol") {
      opt.cfg.tol_pointwise = std::stod(value);
    } else if (flag == "--tol-integral") {
      opt.cfg.tol_integral = std::stod(value);
    } else if (flag == "--seed") {
      opt.cfg.seed = std::stoull(value);
    } else if (flag == "--format") {
      opt.cfg.format = value;
    } else {
      opt.cfg.precision = value;
    }
  }
}

int emit(const sv::RunOutcome& out, const CliOptions& opt) {
  const std::string text = sv::render_report(out.report, opt.cfg.format);
  if (opt.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(opt.output);
    if (!f) {
      std::cerr << "error: cannot write " << opt.output << "\n";
      return 2;
    }
    f << text;
  }
  if (!out.pass) {
    std::cerr << "FAIL: " << out.first_failure << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification engine for the extrinsic geometry of the "
               "standard minimal 2-spheres in round spheres"};
  app.require_subcommand(1);

  CliOptions opt;
  CLI::App* verify = app.add_subcommand("verify", "Pointwise identity suite");
  CLI::App* integrate =
      app.add_subcommand("integrate", "Integral identities and Gauss-Bonnet");
  CLI::App* gap = app.add_subcommand("gap", "Pinching-gap analysis");
  CLI::App* algebra =
      app.add_subcommand("algebra", "Exact polynomial certificates");
  CLI::App* all = app.add_subcommand("all", "Run every suite");
  for (CLI::App* cmd : {verify, integrate, gap, algebra, all})
    add_common_flags(cmd, opt);
  integrate->add_option("--export-rule", opt.export_rule,
                        "Write the quadrature rule as CSV (chart,u,v,weight)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (!opt.config_file.empty()) {
      for (CLI::App* cmd : {verify, integrate, gap, algebra, all})
        if (cmd->parsed()) apply_config_file(cmd, opt);
    }
    sv::RunOutcome out;
    if (verify->parsed()) {
      out = sv::run_verify(opt.cfg);
    } else if (integrate->parsed()) {
      out = sv::run_integrate(opt.cfg);
      if (!opt.export_rule.empty()) {
        std::ofstream f(opt.export_rule);
        if (!f) {
          std::cerr << "error: cannot write " << opt.export_rule << "\n";
          return 2;
        }
        for (int s : opt.cfg.degrees)
          f << sv::quadrature_csv(s, opt.cfg.quad_order);
      }
    } else if (gap->parsed()) {
      out = sv::run_gap(opt.cfg);
    } else if (algebra->parsed()) {
      out = sv::run_algebra(opt.cfg);
    } else {
      out = sv::run_all(opt.cfg);
    }
    return emit(out, opt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
