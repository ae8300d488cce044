#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dcsim/scenario/report.hpp"
#include "dcsim/scenario/scenario.hpp"

namespace dcsim {

struct RunOutput {
  Scenario scenario;
  SimResult sim;
  Metrics metrics;
  RunReport report;
};

/// Runs a scenario and computes metrics plus the report.
RunOutput run_scenario(const Scenario& scenario);

/// Traces selected for CSV/plot output, in the scenario-declared order.
std::vector<const Trace*> selected_traces(const RunOutput& out);

/// Writes traces.csv, metrics.csv, report.txt and plot.svg under dir/<name>/.
/// Returns the output directory used.
std::string write_run_outputs(const RunOutput& out, const std::string& out_dir);

/// Runs several scenarios with up to `workers` concurrent runs; order of the
/// results matches the input order.
std::vector<RunOutput> run_many(const std::vector<Scenario>& scenarios, int workers);

struct SweepPoint {
  double value = 0.0;
  Metrics metrics;
  std::string scenario_name;
};

/// One run per value of the whitelisted numeric parameter `param_path`.
std::vector<SweepPoint> run_sweep(const Scenario& base, const std::string& param_path,
                                  const std::vector<double>& values, int workers);

/// Metric assertion of the form "<metric><op><value>", e.g. "ripple_pp<=140";
/// ops: <=, >=, <, >. Metrics: settling_time, ripple_pp, tone_amp, sag_depth,
/// sag_duration, final_value.
struct MetricAssertion {
  std::string metric;
  std::string op;
  double value = 0.0;
};

MetricAssertion parse_assertion(const std::string& text);
bool check_assertion(const Metrics& m, const MetricAssertion& a, std::string* detail = nullptr);

}  // namespace dcsim
