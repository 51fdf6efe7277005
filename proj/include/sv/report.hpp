#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace sv {

/// One verification run's configuration. Flags and the optional key=value
/// config file both land here; flags win.
struct RunConfig {
  std::vector<int> degrees{2, 3};
  int samples = 200;
  int quad_order = 24;
  double tol_pointwise = 1e-8;
  double tol_integral = 1e-6;
  std::uint64_t seed = 42;
  std::string format = "json";      // json | csv | text
  std::string precision = "double"; // double | extended

  void validate() const;
};

struct RunOutcome {
  nlohmann::ordered_json report;
  bool pass = true;
  std::string first_failure;  // empty when pass

  void merge_failure(bool ok, const std::string& name);
};

RunOutcome run_verify(const RunConfig& cfg);
RunOutcome run_integrate(const RunConfig& cfg);
RunOutcome run_gap(const RunConfig& cfg);
RunOutcome run_algebra(const RunConfig& cfg);
RunOutcome run_all(const RunConfig& cfg);

/// Residual catalog as a JSON schema: name -> {statement, tolerance}.
nlohmann::ordered_json catalog_schema();

/// Render a report in the requested format (json dumps the report itself).
std::string render_report(const nlohmann::ordered_json& report,
                          const std::string& format);

/// Quadrature rule CSV for one degree at the given order.
std::string quadrature_csv(int degree, int n);

}  // namespace sv
