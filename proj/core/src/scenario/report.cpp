#include "dcsim/scenario/report.hpp"

#include <cmath>
#include <sstream>

#include "dcsim/io/csv.hpp"

namespace dcsim {

Metrics compute_run_metrics(const Scenario& scenario, const SimResult& sim) {
  Metrics m;
  const bool current_mode = scenario.controller.mode == ControlMode::current;
  const Trace& tr = sim.trace(current_mode ? "i_o_total" : "u_o");

  const double target = scenario.reference_at(scenario.clock.t_end);
  m.final_value = tr.back();
  m.tone_freq = scenario.grid.pulses * scenario.grid.f_grid;

  if (target != 0.0) m.settling_time = settling_time(tr, target, 0.02);

  const double window = std::min(scenario.outputs.ripple_window,
                                 0.9 * (tr.t_end() - tr.t0));
  m.ripple_pp = ripple_pp(tr, window);

  const double span = tr.t_end() - tr.t0;
  if (span * m.tone_freq >= 3.0) {
    Trace tail = tr.tail_from(tr.t_end() - window);
    if ((tail.t_end() - tail.t0) * m.tone_freq >= 3.0)
      m.tone_amp = tone_amplitude(tail, m.tone_freq);
  }

  if (!scenario.load.events.empty()) {
    const double event_t = scenario.load.events.front().t;
    if (event_t > tr.t0 && event_t < tr.t_end()) {
      const std::size_t pre_idx = tr.index_at(event_t) > 0 ? tr.index_at(event_t) - 1 : 0;
      const double pre_level = tr.samples[pre_idx];
      const SagResult sag = sag_metrics(tr, event_t, pre_level, scenario.outputs.recovery_band);
      m.sag_depth = sag.depth;
      m.sag_duration = sag.duration;
    }
  }
  return m;
}

RunReport build_report(const Scenario& scenario, const SimResult& sim, const Metrics& metrics,
                       double wall_time_s) {
  RunReport rep;
  rep.digest = scenario_digest(scenario);
  rep.metrics = metrics;
  rep.wall_time_s = wall_time_s;

  std::ostringstream o;
  o << "# run report: " << scenario.name << "\n";
  o << "digest = " << rep.digest << "\n";
  o << "\n[metrics]\n";
  o << "settling_time = " << format_double(metrics.settling_time) << "\n";
  o << "ripple_pp = " << format_double(metrics.ripple_pp) << "\n";
  o << "tone_freq = " << format_double(metrics.tone_freq) << "\n";
  o << "tone_amp = " << format_double(metrics.tone_amp) << "\n";
  o << "sag_depth = " << format_double(metrics.sag_depth) << "\n";
  o << "sag_duration = " << format_double(metrics.sag_duration) << "\n";
  o << "final_value = " << format_double(metrics.final_value) << "\n";

  o << "\n[defaults-active]\n";
  o << "k_s = " << format_double(scenario.controller.k_s)
    << "  # adaptive coefficient, artifact default\n";
  o << "hysteresis = " << format_double(scenario.controller.hysteresis)
    << "  # bandwidth-switch band, artifact addition (0 restores the bare law)\n";
  o << "compensation_limit = " << format_double(scenario.compensation.limit)
    << "  # duty-compensation clamp, artifact default\n";
  o << "R_d = " << (scenario.plant.r_d_auto ? "formula 4*n^2*L_lk*f_s" : "explicit override")
    << " -> " << sim.metadata.at("R_d") << "\n";
  o << "n_interpretation = secondary/primary gain " << format_double(scenario.plant.n)
    << "  # plate ratio 1:1.5 read as a step-down\n";
  o << "b0 = " << (scenario.controller.b0_auto ? "auto formula" : "explicit override") << " -> "
    << sim.metadata.at("b0") << "\n";
  o << "delay_quantization = " << sim.metadata.at("delay_quantization") << "\n";
  o << "delays_exact_s = " << sim.metadata.at("delays_exact_s") << "\n";
  o << "delays_ctrl_steps = " << sim.metadata.at("delays_ctrl_steps") << "\n";

  o << "\n[clock]\n";
  o << "dt_plant = " << sim.metadata.at("dt_plant") << "\n";
  o << "dt_ctrl = " << sim.metadata.at("dt_ctrl") << "\n";
  o << "steps_per_ctrl = " << sim.metadata.at("steps_per_ctrl") << "\n";

  if (!scenario.warnings.empty()) {
    o << "\n[warnings]\n";
    for (const auto& w : scenario.warnings) o << w << "\n";
  }

  o << "\n[scenario]\n" << scenario_dump(scenario);

  rep.canonical_text = o.str();
  rep.full_text = rep.canonical_text + "\n# wall_time_s = " + format_double(wall_time_s) +
                  " (not part of the canonical block)\n";
  return rep;
}

}  // namespace dcsim
