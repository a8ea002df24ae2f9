#ifndef GNORMLAB_HARNESS_HPP
#define GNORMLAB_HARNESS_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "gnormlab/ineq.hpp"

namespace gnormlab {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SuiteConfig {
  int trials = 200;
  std::vector<int> dims = {2, 3, 4, 6, 8};
  std::uint64_t seed = 0;
  double spectrum_radius = 0.9;
  double atol = 1e-10;
  double rtol = 1e-9;
  std::vector<std::string> suites = {"all"};
  int contour_nodes = 256;
  std::string report_format = "json";  // "json" | "csv"
  std::string output_path;

  Tolerance tolerance() const { return {atol, rtol}; }
  void validate() const;  // throws ConfigError
};

// Aggregate for one checker x norm-kind cell.
struct KindStats {
  std::string norm_label;
  long trials = 0;
  long violations = 0;
  double min_slack = 0.0;
  double mean_slack = 0.0;
  long equality_witnesses = 0;  // |slack| <= 1e-9
};

struct CheckerReport {
  std::string name;
  bool recording = false;  // recording checkers never affect the exit code
  std::vector<KindStats> kinds;
  nlohmann::json worst;  // generator parameters of the worst instance
  double worst_slack = 0.0;
};

struct SuiteReport {
  SuiteConfig config;
  std::vector<CheckerReport> checkers;
  long long evaluations = 0;
  long long violations = 0;  // non-recording checkers only
  double wall_seconds = 0.0;  // console summary only, never persisted
};

// Registered checker names, in report order.
std::vector<std::string> checker_names();
bool checker_is_recording(const std::string& name);

// Evaluate one deterministic trial of a checker: every norm kind of the
// audit grid (or the fixed kind), every sign/form the checker covers.
std::vector<IneqReport> run_trial(const std::string& checker, int dim, int trial_index,
                                  const SuiteConfig& config);

SuiteReport run_suite(const SuiteConfig& config);

// Renders the report ("json" or "csv"); deterministic bytes for a given
// report. Path variant throws IoError on write failure.
std::string render_report(const SuiteReport& report, const std::string& format);
void emit_report(const SuiteReport& report, const std::string& format, const std::string& path);

// Re-evaluates the instance described by worst-instance parameters and
// returns the matching report; lhs/rhs reproduce bit for bit.
IneqReport replay(const nlohmann::json& instance_params);

// 0 if no violations among non-recording checkers, else 1.
int exit_status(const SuiteReport& report);

}  // namespace gnormlab

#endif
