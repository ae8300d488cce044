// dcsim - scenario-driven simulator of a modular high-power DC supply.
//
// Exit codes: 0 success, 2 validation error, 3 simulation abort,
// 4 metric assertion failure (--assert).

#include <CLI11.hpp>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "dcsim/engine/integrator.hpp"
#include "dcsim/io/csv.hpp"
#include "dcsim/io/ini.hpp"
#include "dcsim/io/svg_plot.hpp"
#include "dcsim/scenario/catalog.hpp"
#include "dcsim/scenario/parse.hpp"
#include "dcsim/scenario/runner.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitAbort = 3;
constexpr int kExitAssert = 4;

using namespace dcsim;

int check_assertions(const std::vector<std::string>& exprs, const RunOutput& out) {
  int rc = 0;
  for (const auto& expr : exprs) {
    const MetricAssertion a = parse_assertion(expr);
    std::string detail;
    const bool ok = check_assertion(out.metrics, a, &detail);
    std::cout << (ok ? "  assert OK   " : "  assert FAIL ") << out.scenario.name << ": " << detail
              << "\n";
    if (!ok) rc = kExitAssert;
  }
  return rc;
}

void apply_full_rate(Scenario& s, bool full_rate) {
  if (full_rate) s.outputs.rate = 1.0 / s.clock.dt_plant;
}

void print_metrics_line(const RunOutput& out) {
  std::cout << out.scenario.name << ": settling_time=" << format_double(out.metrics.settling_time)
            << " s, ripple_pp=" << format_double(out.metrics.ripple_pp)
            << ", tone(" << format_double(out.metrics.tone_freq)
            << " Hz)=" << format_double(out.metrics.tone_amp)
            << ", final=" << format_double(out.metrics.final_value) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dcsim - modular high-power DC supply control simulator"};
  app.require_subcommand(1);

  int workers = 4;
  bool full_rate = false;
  app.add_option("--workers", workers, "max concurrent runs for compare/sweep")
      ->capture_default_str();
  app.add_flag("--full-rate", full_rate, "export traces at the plant integration rate");

  // run
  auto* run_cmd = app.add_subcommand("run", "run one scenario and write traces/metrics/report");
  std::string run_scn;
  std::string run_out = "out";
  std::vector<std::string> run_asserts;
  run_cmd->add_option("scenario", run_scn, "scenario file or catalog name")->required();
  run_cmd->add_option("--out", run_out, "output directory")->capture_default_str();
  run_cmd->add_option("--assert", run_asserts,
                      "metric assertion (metric<=value); exit 4 on violation");

  // compare
  auto* cmp_cmd = app.add_subcommand("compare", "run several scenarios and tabulate metrics");
  std::vector<std::string> cmp_scns;
  std::string cmp_out = "out";
  cmp_cmd->add_option("scenarios", cmp_scns, "scenario files or catalog names")
      ->required()
      ->expected(-1);
  cmp_cmd->add_option("--out", cmp_out, "output directory")->capture_default_str();

  // sweep
  auto* swp_cmd = app.add_subcommand("sweep", "run a scenario across parameter values");
  std::string swp_scn, swp_param, swp_values;
  std::string swp_out = "out";
  swp_cmd->add_option("scenario", swp_scn, "base scenario file or catalog name")->required();
  swp_cmd->add_option("--param", swp_param, "numeric parameter path, e.g. plant.C2")->required();
  swp_cmd->add_option("--values", swp_values, "comma-separated values")->required();
  swp_cmd->add_option("--out", swp_out, "output directory")->capture_default_str();

  // catalog
  auto* cat_cmd = app.add_subcommand("catalog", "list or export the built-in scenarios");
  auto* cat_list = cat_cmd->add_subcommand("list", "list catalog scenarios");
  auto* cat_show = cat_cmd->add_subcommand("show", "print one catalog scenario");
  auto* cat_write = cat_cmd->add_subcommand("write", "write all catalog scenarios as files");
  std::string cat_name;
  std::string cat_dir = "scenarios";
  cat_show->add_option("name", cat_name, "catalog scenario name")->required();
  cat_write->add_option("--out", cat_dir, "directory for the scenario files")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run_cmd) {
      Scenario s = resolve_scenario(run_scn);
      apply_full_rate(s, full_rate);
      const RunOutput out = run_scenario(s);
      const std::string dir = write_run_outputs(out, run_out);
      print_metrics_line(out);
      std::cout << "outputs written to " << dir << "\n";
      return check_assertions(run_asserts, out);
    }

    if (*cmp_cmd) {
      std::vector<Scenario> scenarios;
      for (const auto& name : cmp_scns) {
        scenarios.push_back(resolve_scenario(name));
        apply_full_rate(scenarios.back(), full_rate);
      }
      const std::vector<RunOutput> outs = run_many(scenarios, workers);

      CsvTable table;
      table.header = {"scenario",  "settling_time", "ripple_pp",   "tone_amp",
                      "sag_depth", "sag_duration",  "final_value"};
      for (const auto& out : outs) {
        table.rows.push_back({out.scenario.name, format_double(out.metrics.settling_time),
                              format_double(out.metrics.ripple_pp),
                              format_double(out.metrics.tone_amp),
                              format_double(out.metrics.sag_depth),
                              format_double(out.metrics.sag_duration),
                              format_double(out.metrics.final_value)});
        print_metrics_line(out);
      }
      std::filesystem::create_directories(cmp_out);
      write_text_file((std::filesystem::path(cmp_out) / "comparison.csv").string(),
                      table.to_string());

      // Overlay of the regulated variable, legend labelled per scenario.
      std::vector<Trace> renamed;
      renamed.reserve(outs.size());
      for (const auto& out : outs) {
        renamed.push_back(out.sim.trace(
            out.scenario.controller.mode == ControlMode::current ? "i_o_total" : "u_o"));
        renamed.back().name = out.scenario.name;
      }
      std::vector<const Trace*> overlay;
      for (const auto& tr : renamed) overlay.push_back(&tr);
      PlotSpec spec;
      spec.title = "comparison";
      spec.y_label = "regulated output";
      write_text_file((std::filesystem::path(cmp_out) / "comparison.svg").string(),
                      render_svg_plot(overlay, spec));

      for (const auto& out : outs) write_run_outputs(out, cmp_out);
      std::cout << "comparison written to " << cmp_out << "\n";
      return 0;
    }

    if (*swp_cmd) {
      Scenario base = resolve_scenario(swp_scn);
      apply_full_rate(base, full_rate);
      std::vector<double> values;
      {
        std::istringstream in(swp_values);
        std::string item;
        while (std::getline(in, item, ','))
          values.push_back(parse_double(item, "sweep --values"));
      }
      const auto points = run_sweep(base, swp_param, values, workers);

      CsvTable table;
      table.header = {swp_param,   "settling_time", "ripple_pp",   "tone_amp",
                      "sag_depth", "sag_duration",  "final_value"};
      for (const auto& pt : points) {
        table.rows.push_back({format_double(pt.value), format_double(pt.metrics.settling_time),
                              format_double(pt.metrics.ripple_pp),
                              format_double(pt.metrics.tone_amp),
                              format_double(pt.metrics.sag_depth),
                              format_double(pt.metrics.sag_duration),
                              format_double(pt.metrics.final_value)});
        std::cout << swp_param << " = " << format_double(pt.value)
                  << ": ripple_pp = " << format_double(pt.metrics.ripple_pp)
                  << ", settling_time = " << format_double(pt.metrics.settling_time) << "\n";
      }
      std::filesystem::create_directories(swp_out);
      const std::string path = (std::filesystem::path(swp_out) / "sweep.csv").string();
      write_text_file(path, table.to_string());
      std::cout << "sweep written to " << path << "\n";
      return 0;
    }

    if (*cat_cmd) {
      if (*cat_show) {
        std::cout << catalog_entry(cat_name).text;
        return 0;
      }
      if (*cat_write) {
        std::filesystem::create_directories(cat_dir);
        for (const auto& e : scenario_catalog()) {
          const auto path = std::filesystem::path(cat_dir) / (e.name + ".scn");
          write_text_file(path.string(), e.text);
          std::cout << "wrote " << path.string() << "\n";
        }
        return 0;
      }
      (void)cat_list;  // default action: list
      for (const auto& e : scenario_catalog())
        std::cout << e.name << "  -  " << e.description << "\n";
      return 0;
    }
  } catch (const ConfigError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const SimulationError& e) {
    std::cerr << "simulation abort: " << e.what() << "\n";
    return kExitAbort;
  } catch (const std::invalid_argument& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
