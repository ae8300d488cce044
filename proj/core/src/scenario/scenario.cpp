#include "dcsim/scenario/scenario.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace dcsim {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

std::string to_string(ControllerKind kind) {
  switch (kind) {
    case ControllerKind::pi: return "pi";
    case ControllerKind::ladrc: return "ladrc";
    case ControllerKind::aladrc: return "aladrc";
    case ControllerKind::fixed: return "fixed";
  }
  return "?";
}

std::string to_string(ControlMode mode) {
  return mode == ControlMode::current ? "current" : "voltage";
}

PlantConfig Scenario::plant_resolved() const {
  PlantConfig p = plant;
  if (p.r_d_auto) p.R_d = default_damping_resistance(p);
  return p;
}

double Scenario::nominal_dc_link_voltage() const {
  return average_rectified_voltage(grid);
}

double Scenario::resolved_b0() const {
  if (!controller.b0_auto) return controller.b0;
  const PlantConfig p = plant_resolved();
  const double u_i0 = nominal_dc_link_voltage();
  double b0 = p.n * u_i0 / (p.L2 * p.C2);
  if (controller.mode == ControlMode::current) {
    const double r_eff = module_count() * p.R_load;
    b0 /= r_eff;
  }
  return b0;
}

double Scenario::reference_at(double t) const {
  double v = reference.value;
  for (const auto& step : reference.steps)
    if (t >= step.t) v = step.value;
  return v;
}

std::string scenario_dump(const Scenario& s) {
  std::ostringstream o;
  o << "name = " << s.name << "\n";
  o << "grid.u_ll_rms = " << fmt(s.grid.u_ll_rms) << "\n";
  o << "grid.f_grid = " << fmt(s.grid.f_grid) << "\n";
  o << "grid.pulses = " << s.grid.pulses << "\n";
  const PlantConfig p = s.plant_resolved();
  o << "plant.n = " << fmt(p.n) << "\n";
  o << "plant.L_lk = " << fmt(p.L_lk) << "\n";
  o << "plant.L1 = " << fmt(p.L1) << "\n";
  o << "plant.C1 = " << fmt(p.C1) << "\n";
  o << "plant.L2 = " << fmt(p.L2) << "\n";
  o << "plant.C2 = " << fmt(p.C2) << "\n";
  o << "plant.R_d = " << fmt(p.R_d) << (s.plant.r_d_auto ? " (auto)" : "") << "\n";
  o << "plant.R_s = " << fmt(p.R_s) << "\n";
  o << "plant.f_s = " << fmt(p.f_s) << "\n";
  o << "plant.R_load = " << fmt(p.R_load) << "\n";
  o << "plant.duty_loss = " << (p.duty_loss_enabled ? "on" : "off") << "\n";
  o << "plant.ideal_dc_link = " << (p.ideal_dc_link ? "on" : "off") << "\n";
  o << "plant.precharge = " << (p.precharge ? "on" : "off") << "\n";
  o << "topology.modules_per_group = " << s.topology.modules_per_group << "\n";
  o << "topology.groups = " << s.topology.groups << "\n";
  o << "topology.mismatch_pct = " << fmt(s.topology.mismatch_pct) << "\n";
  o << "topology.seed = " << s.topology.seed << "\n";
  o << "topology.active = ";
  for (bool a : s.topology.active) o << (a ? '1' : '0');
  o << "\n";
  o << "controller.kind = " << to_string(s.controller.kind) << "\n";
  o << "controller.mode = " << to_string(s.controller.mode) << "\n";
  o << "controller.wc0 = " << fmt(s.controller.wc0) << "\n";
  o << "controller.w0 = " << fmt(s.controller.w0) << "\n";
  o << "controller.b0 = " << fmt(s.resolved_b0()) << (s.controller.b0_auto ? " (auto)" : "")
    << "\n";
  o << "controller.k_s = " << fmt(s.controller.k_s) << "\n";
  o << "controller.i_c = " << fmt(s.controller.i_c) << "\n";
  o << "controller.hysteresis = " << fmt(s.controller.hysteresis) << "\n";
  o << "controller.kp = " << fmt(s.controller.kp_pi) << "\n";
  o << "controller.ki = " << fmt(s.controller.ki_pi) << "\n";
  o << "controller.d_max = " << fmt(s.controller.d_max) << "\n";
  o << "controller.fixed_duty = " << fmt(s.controller.fixed_duty) << "\n";
  o << "compensation.enabled = " << (s.compensation.enabled ? "on" : "off") << "\n";
  o << "compensation.k_w = " << fmt(s.compensation.k_w) << "\n";
  o << "compensation.limit = " << fmt(s.compensation.limit) << "\n";
  o << "hdcsc.enabled = " << (s.hdcsc.enabled ? "on" : "off") << "\n";
  o << "reference.value = " << fmt(s.reference.value) << "\n";
  for (const auto& st : s.reference.steps)
    o << "reference.step = " << fmt(st.t) << ":" << fmt(st.value) << "\n";
  for (const auto& ev : s.load.events)
    o << "load.event = " << fmt(ev.t) << ":" << fmt(ev.value) << "\n";
  for (const auto& ev : s.events.drops)
    o << "events.drop_module = " << fmt(ev.t) << ":" << fmt(ev.value) << "\n";
  o << "clock.dt_plant = " << fmt(s.clock.dt_plant) << "\n";
  o << "clock.t_end = " << fmt(s.clock.t_end) << "\n";
  o << "outputs.rate = " << fmt(s.outputs.rate) << "\n";
  o << "outputs.ripple_window = " << fmt(s.outputs.ripple_window) << "\n";
  o << "outputs.recovery_band = " << fmt(s.outputs.recovery_band) << "\n";
  o << "outputs.blowup_bound = " << fmt(s.outputs.blowup_bound) << "\n";
  o << "outputs.traces = ";
  for (std::size_t i = 0; i < s.outputs.traces.size(); ++i)
    o << (i ? "," : "") << s.outputs.traces[i];
  o << "\n";
  return o.str();
}

std::string scenario_digest(const Scenario& s) {
  const std::string dump = scenario_dump(s);
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : dump) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

double* param_ptr(Scenario& s, const std::string& path) {
  if (path == "plant.n") return &s.plant.n;
  if (path == "plant.L_lk") return &s.plant.L_lk;
  if (path == "plant.L1") return &s.plant.L1;
  if (path == "plant.C1") return &s.plant.C1;
  if (path == "plant.L2") return &s.plant.L2;
  if (path == "plant.C2") return &s.plant.C2;
  if (path == "plant.R_d") return &s.plant.R_d;
  if (path == "plant.R_s") return &s.plant.R_s;
  if (path == "plant.R_load") return &s.plant.R_load;
  if (path == "controller.wc0") return &s.controller.wc0;
  if (path == "controller.w0") return &s.controller.w0;
  if (path == "controller.b0") return &s.controller.b0;
  if (path == "controller.k_s") return &s.controller.k_s;
  if (path == "controller.i_c") return &s.controller.i_c;
  if (path == "controller.hysteresis") return &s.controller.hysteresis;
  if (path == "controller.kp") return &s.controller.kp_pi;
  if (path == "controller.ki") return &s.controller.ki_pi;
  if (path == "controller.fixed_duty") return &s.controller.fixed_duty;
  if (path == "compensation.k_w") return &s.compensation.k_w;
  if (path == "compensation.limit") return &s.compensation.limit;
  if (path == "reference.value") return &s.reference.value;
  if (path == "clock.dt_plant") return &s.clock.dt_plant;
  if (path == "clock.t_end") return &s.clock.t_end;
  if (path == "topology.mismatch_pct") return &s.topology.mismatch_pct;
  if (path == "outputs.rate") return &s.outputs.rate;
  return nullptr;
}

}  // namespace

std::vector<std::string> scenario_param_paths() {
  return {"plant.n",        "plant.L_lk",         "plant.L1",
          "plant.C1",       "plant.L2",           "plant.C2",
          "plant.R_d",      "plant.R_s",          "plant.R_load",
          "controller.wc0", "controller.w0",      "controller.b0",
          "controller.k_s", "controller.i_c",     "controller.hysteresis",
          "controller.kp",  "controller.ki",      "controller.fixed_duty",
          "compensation.k_w", "compensation.limit", "reference.value",
          "clock.dt_plant", "clock.t_end",        "topology.mismatch_pct",
          "outputs.rate"};
}

void set_scenario_param(Scenario& s, const std::string& path, double value) {
  double* p = param_ptr(s, path);
  if (!p) throw std::invalid_argument("unknown scenario parameter path: " + path);
  *p = value;
  if (path == "plant.R_d") s.plant.r_d_auto = false;
  if (path == "controller.b0") s.controller.b0_auto = (value == 0.0);
}

double get_scenario_param(const Scenario& s, const std::string& path) {
  Scenario& mut = const_cast<Scenario&>(s);
  double* p = param_ptr(mut, path);
  if (!p) throw std::invalid_argument("unknown scenario parameter path: " + path);
  return *p;
}

}  // namespace dcsim
