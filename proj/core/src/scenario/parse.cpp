#include "dcsim/scenario/parse.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace dcsim {

namespace {

void require_positive(double v, const std::string& what) {
  if (!(v > 0.0) || !std::isfinite(v)) throw ConfigError(what + " must be positive");
}

void require_nonnegative(double v, const std::string& what) {
  if (!(v >= 0.0) || !std::isfinite(v)) throw ConfigError(what + " must be non-negative");
}

// Frozen PI defaults per control mode; documented in the run report.
constexpr double kDefaultPiKpCurrent = 1.0e-3;   // duty per ampere
constexpr double kDefaultPiKiCurrent = 5.0e-2;   // duty per ampere-second
constexpr double kDefaultPiKpVoltage = 2.0e-4;   // duty per volt
constexpr double kDefaultPiKiVoltage = 5.0e-2;   // duty per volt-second

}  // namespace

Scenario parse_scenario_text(const std::string& text, const std::string& origin) {
  const IniFile ini = IniFile::parse(text, origin);
  Scenario s;

  s.name = ini.get_string("meta", "name", s.name);
  ini.get("meta", "description");  // accepted, surfaced by the catalog only

  // [grid]
  s.grid.u_ll_rms = ini.get_double("grid", "u_ll_rms", s.grid.u_ll_rms);
  s.grid.f_grid = ini.get_double("grid", "f_grid", s.grid.f_grid);
  s.grid.pulses = ini.get_int("grid", "pulses", s.grid.pulses);
  require_positive(s.grid.u_ll_rms, "grid.u_ll_rms");
  require_positive(s.grid.f_grid, "grid.f_grid");
  if (s.grid.pulses < 2) throw ConfigError("grid.pulses must be >= 2");

  // [plant]
  s.plant.n = ini.get_double("plant", "n", s.plant.n);
  s.plant.L_lk = ini.get_double("plant", "L_lk", s.plant.L_lk);
  s.plant.L1 = ini.get_double("plant", "L1", s.plant.L1);
  s.plant.C1 = ini.get_double("plant", "C1", s.plant.C1);
  s.plant.L2 = ini.get_double("plant", "L2", s.plant.L2);
  s.plant.C2 = ini.get_double("plant", "C2", s.plant.C2);
  s.plant.R_s = ini.get_double("plant", "R_s", s.plant.R_s);
  s.plant.f_s = ini.get_double("plant", "f_s", s.plant.f_s);
  s.plant.R_load = ini.get_double("plant", "R_load", s.plant.R_load);
  s.plant.duty_loss_enabled = ini.get_bool("plant", "duty_loss", s.plant.duty_loss_enabled);
  s.plant.ideal_dc_link = ini.get_bool("plant", "ideal_dc_link", s.plant.ideal_dc_link);
  s.plant.precharge = ini.get_bool("plant", "precharge", s.plant.precharge);
  if (auto rd = ini.get("plant", "R_d")) {
    if (*rd == "auto") {
      s.plant.r_d_auto = true;
    } else {
      s.plant.R_d = parse_double(*rd, "plant.R_d");
      s.plant.r_d_auto = false;
      require_nonnegative(s.plant.R_d, "plant.R_d");
    }
  } else {
    s.plant.r_d_auto = true;  // default: conventional damping formula
  }
  require_positive(s.plant.n, "plant.n");
  require_positive(s.plant.L_lk, "plant.L_lk");
  require_positive(s.plant.L1, "plant.L1");
  require_positive(s.plant.C1, "plant.C1");
  require_positive(s.plant.L2, "plant.L2");
  require_positive(s.plant.C2, "plant.C2");
  require_nonnegative(s.plant.R_s, "plant.R_s");
  require_positive(s.plant.f_s, "plant.f_s");
  require_positive(s.plant.R_load, "plant.R_load");

  // [topology]
  s.topology.modules_per_group =
      ini.get_int("topology", "modules_per_group", s.topology.modules_per_group);
  s.topology.groups = ini.get_int("topology", "groups", s.topology.groups);
  s.topology.mismatch_pct = ini.get_double("topology", "mismatch_pct", s.topology.mismatch_pct);
  s.topology.seed = static_cast<std::uint64_t>(
      ini.get_int("topology", "seed", static_cast<int>(s.topology.seed)));
  if (s.topology.modules_per_group < 1) throw ConfigError("topology.modules_per_group must be >= 1");
  if (s.topology.groups < 1) throw ConfigError("topology.groups must be >= 1");
  require_nonnegative(s.topology.mismatch_pct, "topology.mismatch_pct");
  const int n_modules = s.module_count();
  if (auto mask = ini.get("topology", "active")) {
    if (static_cast<int>(mask->size()) != n_modules)
      throw ConfigError("topology.active must have one 0/1 digit per module (" +
                        std::to_string(n_modules) + ")");
    s.topology.active.clear();
    bool any = false;
    for (char c : *mask) {
      if (c != '0' && c != '1') throw ConfigError("topology.active must contain only 0 and 1");
      s.topology.active.push_back(c == '1');
      any = any || c == '1';
    }
    if (!any) throw ConfigError("topology.active: at least one module must be active");
  } else {
    s.topology.active.assign(static_cast<std::size_t>(n_modules), true);
  }

  // [controller]
  {
    auto kind = ini.get("controller", "kind");
    if (!kind) throw ConfigError("controller.kind required");
    if (*kind == "pi") s.controller.kind = ControllerKind::pi;
    else if (*kind == "ladrc") s.controller.kind = ControllerKind::ladrc;
    else if (*kind == "aladrc") s.controller.kind = ControllerKind::aladrc;
    else if (*kind == "fixed") s.controller.kind = ControllerKind::fixed;
    else throw ConfigError("controller.kind must be pi, ladrc, aladrc or fixed (got '" + *kind + "')");
  }
  {
    const std::string mode = ini.get_string("controller", "mode", "current");
    if (mode == "current") s.controller.mode = ControlMode::current;
    else if (mode == "voltage") s.controller.mode = ControlMode::voltage;
    else throw ConfigError("controller.mode must be current or voltage (got '" + mode + "')");
  }
  s.controller.wc0 = ini.get_double("controller", "wc0", s.controller.wc0);
  s.controller.w0 = ini.get_double("controller", "w0", s.controller.w0);
  s.controller.k_s = ini.get_double("controller", "k_s", s.controller.k_s);
  s.controller.i_c = ini.get_double("controller", "i_c", s.controller.i_c);
  s.controller.hysteresis = ini.get_double("controller", "hysteresis", s.controller.hysteresis);
  s.controller.d_max = ini.get_double("controller", "d_max", s.controller.d_max);
  s.controller.fixed_duty = ini.get_double("controller", "fixed_duty", s.controller.fixed_duty);
  if (auto b0 = ini.get("controller", "b0")) {
    if (*b0 == "auto") {
      s.controller.b0_auto = true;
    } else {
      s.controller.b0 = parse_double(*b0, "controller.b0");
      s.controller.b0_auto = false;
      if (s.controller.b0 == 0.0) throw ConfigError("controller.b0 must be nonzero (or 'auto')");
    }
  }
  {
    auto kp = ini.get("controller", "kp");
    auto ki = ini.get("controller", "ki");
    if (kp || ki) {
      s.controller.pi_gains_set = true;
      s.controller.kp_pi = kp ? parse_double(*kp, "controller.kp") : 0.0;
      s.controller.ki_pi = ki ? parse_double(*ki, "controller.ki") : 0.0;
    } else {
      const bool current = s.controller.mode == ControlMode::current;
      s.controller.kp_pi = current ? kDefaultPiKpCurrent : kDefaultPiKpVoltage;
      s.controller.ki_pi = current ? kDefaultPiKiCurrent : kDefaultPiKiVoltage;
    }
  }
  const bool is_ladrc =
      s.controller.kind == ControllerKind::ladrc || s.controller.kind == ControllerKind::aladrc;
  if (is_ladrc) {
    require_positive(s.controller.wc0, "controller.wc0");
    require_positive(s.controller.w0, "controller.w0");
    if (s.controller.w0 < s.controller.wc0)
      throw ConfigError("controller.w0 < controller.wc0: observer slower than controller");
    if (s.controller.w0 < 4.0 * s.controller.wc0 || s.controller.w0 > 10.0 * s.controller.wc0)
      s.warnings.push_back("controller.w0 outside the recommended 4-10x wc0 range");
  }
  if (s.controller.kind == ControllerKind::aladrc) {
    require_nonnegative(s.controller.k_s, "controller.k_s");
    require_nonnegative(s.controller.hysteresis, "controller.hysteresis");
    if (!(s.controller.wc0 - 2.0 * s.controller.k_s > 0.0))
      throw ConfigError("controller.wc0 - 2*k_s must stay positive (adapted bandwidth)");
  }
  if (s.controller.kind == ControllerKind::fixed) {
    if (s.controller.fixed_duty < 0.0 || s.controller.fixed_duty > 1.0)
      throw ConfigError("controller.fixed_duty must lie in [0, 1]");
  }
  if (!(s.controller.d_max > 0.0 && s.controller.d_max <= 1.0))
    throw ConfigError("controller.d_max must lie in (0, 1]");

  // [compensation]
  s.compensation.enabled = ini.get_bool("compensation", "enabled", s.compensation.enabled);
  s.compensation.k_w = ini.get_double("compensation", "k_w", s.compensation.k_w);
  s.compensation.limit = ini.get_double("compensation", "limit", s.compensation.limit);
  require_nonnegative(s.compensation.k_w, "compensation.k_w");
  require_positive(s.compensation.limit, "compensation.limit");

  // [hdcsc]
  s.hdcsc.enabled = ini.get_bool("hdcsc", "enabled", s.hdcsc.enabled);

  // [clock] (needed before time-window validation below)
  s.clock.dt_plant = ini.get_double("clock", "dt_plant", s.clock.dt_plant);
  s.clock.t_end = ini.get_double("clock", "t_end", s.clock.t_end);
  require_positive(s.clock.dt_plant, "clock.dt_plant");
  require_positive(s.clock.t_end, "clock.t_end");
  if (s.clock.dt_plant > 1.0 / s.plant.f_s)
    throw ConfigError("clock.dt_plant must not exceed the control period 1/f_s");

  auto check_time = [&](double t, const std::string& what) {
    if (t < 0.0 || t > s.clock.t_end)
      throw ConfigError(what + ": time " + std::to_string(t) + " outside [0, t_end]");
  };

  // [reference]
  s.reference.value = ini.get_double("reference", "value", s.reference.value);
  require_nonnegative(s.reference.value, "reference.value");
  for (auto [t, v] : ini.get_timed_list("reference", "steps")) {
    check_time(t, "reference.steps");
    require_nonnegative(v, "reference.steps value");
    s.reference.steps.push_back({t, v});
  }
  std::sort(s.reference.steps.begin(), s.reference.steps.end(),
            [](const TimedValue& a, const TimedValue& b) { return a.t < b.t; });

  if (s.compensation.enabled && s.reference.value <= 0.0)
    throw ConfigError("compensation requires a positive reference value");

  // [load]
  for (auto [t, r] : ini.get_timed_list("load", "events")) {
    check_time(t, "load.events");
    require_positive(r, "load.events resistance");
    s.load.events.push_back({t, r});
  }
  std::sort(s.load.events.begin(), s.load.events.end(),
            [](const TimedValue& a, const TimedValue& b) { return a.t < b.t; });

  // [events]
  for (auto [t, idx] : ini.get_timed_list("events", "drop_module")) {
    check_time(t, "events.drop_module");
    const int i = static_cast<int>(idx);
    if (static_cast<double>(i) != idx || i < 1 || i > n_modules)
      throw ConfigError("events.drop_module: module index must be in 1.." +
                        std::to_string(n_modules));
    s.events.drops.push_back({t, idx});
  }
  std::sort(s.events.drops.begin(), s.events.drops.end(),
            [](const TimedValue& a, const TimedValue& b) { return a.t < b.t; });

  // [outputs]
  s.outputs.rate = ini.get_double("outputs", "rate", s.outputs.rate);
  s.outputs.ripple_window = ini.get_double("outputs", "ripple_window", s.outputs.ripple_window);
  s.outputs.recovery_band = ini.get_double("outputs", "recovery_band", s.outputs.recovery_band);
  s.outputs.blowup_bound = ini.get_double("outputs", "blowup_bound", s.outputs.blowup_bound);
  s.outputs.traces = ini.get_string_list("outputs", "traces");
  require_positive(s.outputs.rate, "outputs.rate");
  require_positive(s.outputs.ripple_window, "outputs.ripple_window");
  require_positive(s.outputs.blowup_bound, "outputs.blowup_bound");
  if (!(s.outputs.recovery_band > 0.0 && s.outputs.recovery_band < 0.5))
    throw ConfigError("outputs.recovery_band must lie in (0, 0.5)");
  if (s.outputs.ripple_window >= s.clock.t_end)
    throw ConfigError("outputs.ripple_window must be shorter than t_end");

  // Trace selection names must exist for this module count.
  if (!s.outputs.traces.empty()) {
    std::set<std::string> valid{"u_o", "i_o_total"};
    char buf[16];
    for (int i = 1; i <= n_modules; ++i) {
      for (const char* prefix : {"i_o_%02d", "d_%02d", "u_i_%02d", "u_rect_%02d"}) {
        std::snprintf(buf, sizeof(buf), prefix, i);
        valid.insert(buf);
      }
    }
    for (const auto& name : s.outputs.traces)
      if (!valid.count(name))
        throw ConfigError("outputs.traces: unknown trace name '" + name + "'");
  }

  ini.reject_unconsumed({"meta", "grid", "plant", "topology", "controller", "compensation",
                         "hdcsc", "reference", "load", "events", "clock", "outputs"});
  return s;
}

Scenario parse_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open scenario file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  Scenario s = parse_scenario_text(buf.str(), path);
  if (s.name == "scenario") s.name = std::filesystem::path(path).stem().string();
  return s;
}

}  // namespace dcsim
