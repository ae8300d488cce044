#include "dcsim/scenario/runner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <filesystem>
#include <thread>

#include "dcsim/io/csv.hpp"
#include "dcsim/io/ini.hpp"
#include "dcsim/io/svg_plot.hpp"

namespace dcsim {

RunOutput run_scenario(const Scenario& scenario) {
  RunOutput out;
  out.scenario = scenario;
  const auto start = std::chrono::steady_clock::now();
  out.sim = run_simulation(scenario);
  out.metrics = compute_run_metrics(scenario, out.sim);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  out.report = build_report(scenario, out.sim, out.metrics, elapsed.count());
  return out;
}

std::vector<const Trace*> selected_traces(const RunOutput& out) {
  std::vector<const Trace*> traces;
  if (out.scenario.outputs.traces.empty()) {
    for (const auto& tr : out.sim.traces) traces.push_back(&tr);
  } else {
    for (const auto& name : out.scenario.outputs.traces) traces.push_back(&out.sim.trace(name));
  }
  return traces;
}

std::string write_run_outputs(const RunOutput& out, const std::string& out_dir) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::path(out_dir) / out.scenario.name;
  fs::create_directories(dir);

  const auto traces = selected_traces(out);
  write_text_file((dir / "traces.csv").string(), traces_to_csv(traces));

  CsvTable table;
  table.header = {"scenario",      "settling_time", "ripple_pp", "tone_freq",
                  "tone_amp",      "sag_depth",     "sag_duration", "final_value"};
  table.rows.push_back({out.scenario.name, format_double(out.metrics.settling_time),
                        format_double(out.metrics.ripple_pp), format_double(out.metrics.tone_freq),
                        format_double(out.metrics.tone_amp), format_double(out.metrics.sag_depth),
                        format_double(out.metrics.sag_duration),
                        format_double(out.metrics.final_value)});
  write_text_file((dir / "metrics.csv").string(), table.to_string());

  write_text_file((dir / "report.txt").string(), out.report.full_text);

  // Overview plot: the regulated variable plus the bus voltage.
  std::vector<const Trace*> plot_traces;
  plot_traces.push_back(&out.sim.trace("i_o_total"));
  plot_traces.push_back(&out.sim.trace("u_o"));
  PlotSpec spec;
  spec.title = out.scenario.name;
  spec.y_label = "output";
  write_text_file((dir / "plot.svg").string(), render_svg_plot(plot_traces, spec));

  return dir.string();
}

std::vector<RunOutput> run_many(const std::vector<Scenario>& scenarios, int workers) {
  std::vector<RunOutput> results(scenarios.size());
  std::vector<std::exception_ptr> errors(scenarios.size());
  if (workers < 1) workers = 1;
  workers = std::min<int>(workers, static_cast<int>(scenarios.size()));

  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= scenarios.size()) return;
      try {
        results[i] = run_scenario(scenarios[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  for (const auto& err : errors)
    if (err) std::rethrow_exception(err);
  return results;
}

std::vector<SweepPoint> run_sweep(const Scenario& base, const std::string& param_path,
                                  const std::vector<double>& values, int workers) {
  if (values.empty()) throw ConfigError("sweep: values list must not be empty");

  std::vector<Scenario> scenarios;
  scenarios.reserve(values.size());
  for (double v : values) {
    Scenario s = base;
    set_scenario_param(s, param_path, v);
    s.name = base.name + "_" + param_path + "_" + format_double(v);
    scenarios.push_back(std::move(s));
  }

  const auto outputs = run_many(scenarios, workers);
  std::vector<SweepPoint> points;
  points.reserve(outputs.size());
  for (std::size_t i = 0; i < outputs.size(); ++i)
    points.push_back({values[i], outputs[i].metrics, outputs[i].scenario.name});
  return points;
}

MetricAssertion parse_assertion(const std::string& text) {
  for (const char* op : {"<=", ">=", "<", ">"}) {
    const auto pos = text.find(op);
    if (pos != std::string::npos) {
      MetricAssertion a;
      a.metric = text.substr(0, pos);
      a.op = op;
      a.value = parse_double(text.substr(pos + std::string(op).size()), "assertion value");
      return a;
    }
  }
  throw ConfigError("assertion must look like metric<=value (got '" + text + "')");
}

bool check_assertion(const Metrics& m, const MetricAssertion& a, std::string* detail) {
  double v;
  if (a.metric == "settling_time") v = m.settling_time;
  else if (a.metric == "ripple_pp") v = m.ripple_pp;
  else if (a.metric == "tone_amp") v = m.tone_amp;
  else if (a.metric == "sag_depth") v = m.sag_depth;
  else if (a.metric == "sag_duration") v = m.sag_duration;
  else if (a.metric == "final_value") v = m.final_value;
  else throw ConfigError("unknown assertion metric '" + a.metric + "'");

  bool ok;
  if (a.op == "<=") ok = v <= a.value;
  else if (a.op == ">=") ok = v >= a.value;
  else if (a.op == "<") ok = v < a.value;
  else ok = v > a.value;

  if (detail) {
    *detail = a.metric + " = " + format_double(v) + " (" + (ok ? "satisfies" : "violates") +
              " " + a.op + " " + format_double(a.value) + ")";
  }
  return ok;
}

}  // namespace dcsim
