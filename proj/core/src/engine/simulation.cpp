#include "dcsim/engine/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "dcsim/control/ladrc.hpp"
#include "dcsim/control/pi.hpp"
#include "dcsim/engine/delay_line.hpp"
#include "dcsim/engine/integrator.hpp"
#include "dcsim/hdcsc/schedule.hpp"
#include "dcsim/hdcsc/sharing.hpp"

namespace dcsim {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

// Deterministic, stdlib-independent uniform draw in [-1, 1).
class MismatchSampler {
 public:
  explicit MismatchSampler(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  double next() {
    // splitmix64
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    z ^= z >> 31;
    return std::ldexp(static_cast<double>(z >> 11), -52) - 1.0;
  }

 private:
  std::uint64_t state_;
};

// Full-system averaged model: N modules plus the shared bus.
struct SystemModel {
  const GridParams* grid = nullptr;
  const std::vector<PlantParams>* params = nullptr;
  const std::vector<bool>* active = nullptr;
  const std::vector<double>* applied_duty = nullptr;
  double c_bus = 0.0;
  double r_load = 0.0;
  bool ideal_dc_link = false;
  double u_i0 = 0.0;

  std::size_t n = 0;

  void operator()(double t, const std::vector<double>& x, std::vector<double>& dx) const {
    const double u_bus = x[3 * n];
    const double u_rect = rectified_voltage(t, *grid);
    double sum_inj = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t base = 3 * i;
      if (!(*active)[i]) {
        dx[base] = dx[base + 1] = dx[base + 2] = 0.0;
        continue;
      }
      const PlantParams& p = (*params)[i];
      const double i_L1 = x[base];
      const double u_C1 = ideal_dc_link ? u_i0 : x[base + 1];
      const double i_L2 = x[base + 2];

      const double d_eff = effective_duty((*applied_duty)[i], i_L2, u_C1, p);

      if (ideal_dc_link) {
        dx[base] = 0.0;
        dx[base + 1] = 0.0;
      } else {
        double di1 = (u_rect - u_C1 - p.R_s * i_L1) / p.L1;
        if (i_L1 <= 0.0 && di1 < 0.0) di1 = 0.0;  // blocking diode
        dx[base] = di1;
        dx[base + 1] = (i_L1 - d_eff * p.n * i_L2) / p.C1;
      }
      dx[base + 2] = (d_eff * p.n * u_C1 - u_bus - p.R_d * i_L2) / p.L2;
      sum_inj += i_L2;
    }
    dx[3 * n] = (sum_inj - u_bus / r_load) / c_bus;
  }
};

struct ModuleController {
  ControllerKind kind = ControllerKind::pi;
  PiController pi;
  LadrcController ladrc;
  AdaptiveBandwidth adaptive;
  DelayLine comp_delay;
  double last_command = 0.0;
};

}  // namespace

const Trace& SimResult::trace(const std::string& name) const {
  for (const auto& tr : traces)
    if (tr.name == name) return tr;
  throw std::out_of_range("SimResult: no trace named " + name);
}

bool SimResult::has_trace(const std::string& name) const {
  for (const auto& tr : traces)
    if (tr.name == name) return true;
  return false;
}

SimResult run_simulation(const Scenario& scenario) {
  const int n_modules = scenario.module_count();
  const std::size_t n = static_cast<std::size_t>(n_modules);
  const PlantConfig base_plant = scenario.plant_resolved();

  SimResult result;
  result.clock = SimClock::make(scenario.clock.dt_plant, base_plant.f_s, scenario.clock.t_end);
  const SimClock& clk = result.clock;

  // Per-module parameters with deterministic mismatch on L2 and C2.
  MismatchSampler sampler(scenario.topology.seed);
  const double tol = scenario.topology.mismatch_pct / 100.0;
  result.module_params.assign(n, base_plant);
  for (std::size_t i = 0; i < n; ++i) {
    const double dl = sampler.next() * tol;
    const double dc = sampler.next() * tol;
    result.module_params[i].L2 = base_plant.L2 * (1.0 + dl);
    result.module_params[i].C2 = base_plant.C2 * (1.0 + dc);
  }

  std::vector<bool> active = scenario.topology.active;
  if (active.empty()) active.assign(n, true);

  auto compute_c_bus = [&]() {
    double c = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      if (active[i]) c += result.module_params[i].C2;
    return c;
  };
  result.c_bus = compute_c_bus();

  const double u_i0 = scenario.nominal_dc_link_voltage();
  const double b0 = scenario.resolved_b0();

  // Delay schedule: exact values from the topology, applied to the duty path
  // quantized to whole control periods.
  Topology topo{scenario.topology.modules_per_group, scenario.topology.groups};
  const DelaySchedule sched = build_schedule(topo, scenario.grid.f_grid, scenario.grid.pulses);

  std::vector<ModuleController> ctrl(n);
  const DutyLimits limits{0.0, scenario.controller.d_max};
  for (std::size_t i = 0; i < n; ++i) {
    ctrl[i].kind = scenario.controller.kind;
    switch (scenario.controller.kind) {
      case ControllerKind::pi:
        ctrl[i].pi = PiController(scenario.controller.kp_pi, scenario.controller.ki_pi, limits);
        break;
      case ControllerKind::ladrc:
      case ControllerKind::aladrc:
        ctrl[i].ladrc = LadrcController(scenario.controller.wc0, scenario.controller.w0, b0, limits);
        ctrl[i].adaptive = AdaptiveBandwidth(scenario.controller.wc0, scenario.controller.k_s,
                                             scenario.controller.i_c, scenario.controller.hysteresis);
        break;
      case ControllerKind::fixed:
        break;
    }
    const double delay = scenario.hdcsc.enabled ? sched.module_delays[i] : 0.0;
    ctrl[i].comp_delay = DelayLine(delay, clk.dt_ctrl, 0.0);
  }

  // State vector: [i_L1, u_C1, i_L2] per module, then u_bus.
  std::vector<double> x(3 * n + 1, 0.0);
  if (base_plant.ideal_dc_link || base_plant.precharge) {
    const double u0 = base_plant.ideal_dc_link ? u_i0 : rectified_voltage(0.0, scenario.grid);
    for (std::size_t i = 0; i < n; ++i) x[3 * i + 1] = u0;
  }

  std::vector<double> applied(n, 0.0);
  double r_load = base_plant.R_load;

  SystemModel model;
  model.grid = &scenario.grid;
  model.params = &result.module_params;
  model.active = &active;
  model.applied_duty = &applied;
  model.c_bus = result.c_bus;
  model.r_load = r_load;
  model.ideal_dc_link = base_plant.ideal_dc_link;
  model.u_i0 = u_i0;
  model.n = n;

  // Trace setup: declared order is u_o, i_o_total, then per-module blocks.
  const std::int64_t decim =
      std::max<std::int64_t>(1, std::llround(1.0 / (scenario.outputs.rate * clk.dt_plant)));
  const double trace_dt = static_cast<double>(decim) * clk.dt_plant;

  std::vector<Trace> traces;
  auto add_trace = [&](const std::string& name) {
    Trace tr;
    tr.name = name;
    tr.t0 = 0.0;
    tr.dt = trace_dt;
    tr.samples.reserve(static_cast<std::size_t>(clk.total_steps / decim) + 1);
    traces.push_back(std::move(tr));
  };
  char nbuf[24];
  add_trace("u_o");
  add_trace("i_o_total");
  for (int i = 0; i < n_modules; ++i) {
    std::snprintf(nbuf, sizeof(nbuf), "i_o_%02d", i + 1);
    add_trace(nbuf);
  }
  for (int i = 0; i < n_modules; ++i) {
    std::snprintf(nbuf, sizeof(nbuf), "d_%02d", i + 1);
    add_trace(nbuf);
  }
  for (int i = 0; i < n_modules; ++i) {
    std::snprintf(nbuf, sizeof(nbuf), "u_i_%02d", i + 1);
    add_trace(nbuf);
  }
  for (int i = 0; i < n_modules; ++i) {
    std::snprintf(nbuf, sizeof(nbuf), "u_rect_%02d", i + 1);
    add_trace(nbuf);
  }

  auto record = [&](double t) {
    const double u_bus = x[3 * n];
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      if (active[i]) total += x[3 * i + 2];
    const double u_rect = rectified_voltage(t, scenario.grid);
    std::size_t c = 0;
    traces[c++].samples.push_back(u_bus);
    traces[c++].samples.push_back(total);
    for (std::size_t i = 0; i < n; ++i) traces[c++].samples.push_back(x[3 * i + 2]);
    for (std::size_t i = 0; i < n; ++i) traces[c++].samples.push_back(applied[i]);
    for (std::size_t i = 0; i < n; ++i)
      traces[c++].samples.push_back(base_plant.ideal_dc_link ? u_i0 : x[3 * i + 1]);
    for (std::size_t i = 0; i < n; ++i) traces[c++].samples.push_back(u_rect);
  };

  // Event cursors.
  std::size_t load_cursor = 0;
  std::size_t drop_cursor = 0;

  Rk4Scratch scratch;
  const double bound = scenario.outputs.blowup_bound;

  auto control_tick = [&](double t) {
    const double u_bus = x[3 * n];
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      if (active[i]) total += x[3 * i + 2];

    const double ref_total = scenario.reference_at(t);
    std::vector<double> refs;
    if (scenario.controller.mode == ControlMode::current) {
      refs = share_reference(ref_total, active);
    } else {
      refs.assign(n, ref_total);
    }

    for (std::size_t i = 0; i < n; ++i) {
      if (!active[i]) {
        applied[i] = 0.0;
        continue;
      }
      const double y =
          scenario.controller.mode == ControlMode::current ? x[3 * i + 2] : u_bus;
      const double ref = refs[i];

      double d_l = 0.0;
      switch (ctrl[i].kind) {
        case ControllerKind::pi:
          d_l = ctrl[i].pi.step(ref - y, clk.dt_ctrl);
          break;
        case ControllerKind::aladrc:
          ctrl[i].ladrc.set_bandwidth(ctrl[i].adaptive.update(total));
          [[fallthrough]];
        case ControllerKind::ladrc:
          ctrl[i].ladrc.observe(y, ctrl[i].last_command, clk.dt_ctrl);
          d_l = ctrl[i].ladrc.duty(ref);
          break;
        case ControllerKind::fixed:
          d_l = scenario.controller.fixed_duty;
          break;
      }

      double d_c = 0.0;
      if (scenario.compensation.enabled && ref > 0.0)
        d_c = duty_compensation(y, ref, scenario.compensation.k_w, scenario.compensation.limit);
      // The staggered schedule delays the compensation action; the regulation
      // path stays fresh so the loop keeps its phase margin.
      d_c = ctrl[i].comp_delay.read_write(d_c);

      const double d = total_duty(d_l, d_c, scenario.controller.d_max);
      ctrl[i].last_command = d;
      applied[i] = d;
    }
  };

  double prev_pin = 0.0, prev_pload = 0.0;

  for (std::int64_t k = 0; k <= clk.total_steps; ++k) {
    const double t = clk.time_of(k);

    // Stepwise events apply at plant-step resolution.
    while (load_cursor < scenario.load.events.size() &&
           t >= scenario.load.events[load_cursor].t) {
      r_load = scenario.load.events[load_cursor].value;
      model.r_load = r_load;
      ++load_cursor;
    }
    while (drop_cursor < scenario.events.drops.size() &&
           t >= scenario.events.drops[drop_cursor].t) {
      const int idx = static_cast<int>(scenario.events.drops[drop_cursor].value) - 1;
      if (idx >= 0 && idx < n_modules && active[static_cast<std::size_t>(idx)]) {
        active[static_cast<std::size_t>(idx)] = false;
        x[3 * static_cast<std::size_t>(idx) + 2] = 0.0;  // breaker opens the output leg
        applied[static_cast<std::size_t>(idx)] = 0.0;
        model.c_bus = compute_c_bus();
      }
      ++drop_cursor;
    }

    if (k % clk.steps_per_ctrl == 0 && k < clk.total_steps) control_tick(t);
    if (k % decim == 0) record(t);
    if (k == clk.total_steps) break;

    // Trapezoidal energy accounting: pre-step powers at t.
    {
      const double u_rect = rectified_voltage(t, scenario.grid);
      double pin = 0.0;
      for (std::size_t i = 0; i < n; ++i)
        if (active[i]) pin += u_rect * x[3 * i];
      const double u_bus = x[3 * n];
      prev_pin = pin;
      prev_pload = u_bus * u_bus / r_load;
    }

    try {
      rk4_step(model, t, clk.dt_plant, x, scratch);
    } catch (const SimulationError& e) {
      throw SimulationError(std::string(e.what()) + " [scenario " + scenario.name +
                            ", controller " + to_string(scenario.controller.kind) + "]");
    }

    // Diode keeps the DC-link inductor current non-negative.
    for (std::size_t i = 0; i < n; ++i)
      if (x[3 * i] < 0.0) x[3 * i] = 0.0;

    for (std::size_t i = 0; i < x.size(); ++i) {
      if (!(std::abs(x[i]) <= bound)) {
        std::ostringstream msg;
        msg << "simulation abort: state " << i << " (|" << x[i] << "| > " << bound
            << ") at t=" << fmt(t + clk.dt_plant) << " s, scenario " << scenario.name
            << ", controller " << to_string(scenario.controller.kind);
        if (i < 3 * n) msg << ", module " << (i / 3 + 1);
        throw SimulationError(msg.str());
      }
    }

    // Second half of the trapezoid uses the post-step powers at t+dt.
    {
      const double tn = clk.time_of(k + 1);
      const double u_rect = rectified_voltage(tn, scenario.grid);
      double pin = 0.0;
      for (std::size_t i = 0; i < n; ++i)
        if (active[i]) pin += u_rect * x[3 * i];
      const double u_bus = x[3 * n];
      const double pload = u_bus * u_bus / r_load;
      result.energy_in += 0.5 * (prev_pin + pin) * clk.dt_plant;
      result.energy_load += 0.5 * (prev_pload + pload) * clk.dt_plant;
    }
  }

  result.traces = std::move(traces);
  result.c_bus = model.c_bus;  // reflects drop events
  result.final_u_bus = x[3 * n];
  result.final_states.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    result.final_states[i] = {x[3 * i], base_plant.ideal_dc_link ? u_i0 : x[3 * i + 1],
                              x[3 * i + 2]};
  }

  // Run metadata: resolved values and quantization for the report.
  result.metadata["dt_plant"] = fmt(clk.dt_plant);
  result.metadata["dt_ctrl"] = fmt(clk.dt_ctrl);
  result.metadata["steps_per_ctrl"] = std::to_string(clk.steps_per_ctrl);
  result.metadata["u_i0"] = fmt(u_i0);
  result.metadata["b0"] = fmt(b0);
  result.metadata["R_d"] = fmt(base_plant.R_d);
  result.metadata["c_bus"] = fmt(result.c_bus);
  {
    std::ostringstream d_exact, d_steps;
    for (std::size_t i = 0; i < n; ++i) {
      const double d = scenario.hdcsc.enabled ? sched.module_delays[i] : 0.0;
      d_exact << (i ? "," : "") << fmt(d);
      d_steps << (i ? "," : "") << ctrl[i].comp_delay.delay_steps();
    }
    result.metadata["delays_exact_s"] = d_exact.str();
    result.metadata["delays_ctrl_steps"] = d_steps.str();
    result.metadata["delay_quantization"] = "nearest control period";
  }
  {
    std::ostringstream l2s, c2s;
    for (std::size_t i = 0; i < n; ++i) {
      l2s << (i ? "," : "") << fmt(result.module_params[i].L2);
      c2s << (i ? "," : "") << fmt(result.module_params[i].C2);
    }
    result.metadata["module_L2"] = l2s.str();
    result.metadata["module_C2"] = c2s.str();
  }
  return result;
}

}  // namespace dcsim
