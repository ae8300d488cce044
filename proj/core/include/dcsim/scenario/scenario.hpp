#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dcsim/hdcsc/schedule.hpp"
#include "dcsim/plant/grid.hpp"
#include "dcsim/plant/module_model.hpp"

namespace dcsim {

enum class ControllerKind { pi, ladrc, aladrc, fixed };
enum class ControlMode { current, voltage };

std::string to_string(ControllerKind kind);
std::string to_string(ControlMode mode);

struct TopologyConfig {
  int modules_per_group = 3;   // x
  int groups = 4;              // y
  std::vector<bool> active;    // resolved to size x*y at validation
  double mismatch_pct = 1.0;   // +/- tolerance applied to per-module L2, C2
  std::uint64_t seed = 1;
};

struct ControllerConfig {
  ControllerKind kind = ControllerKind::pi;
  ControlMode mode = ControlMode::current;
  // LADRC / A-LADRC
  double wc0 = 400.0;        // rad/s
  double w0 = 2800.0;        // rad/s
  double b0 = 0.0;           // 0 selects the auto formula
  bool b0_auto = true;
  double k_s = 100.0;        // rad/s
  double i_c = 30.0;         // amperes
  double hysteresis = 2.0;   // amperes
  // PI
  double kp_pi = 0.0;        // resolved per mode at validation when unset
  double ki_pi = 0.0;
  bool pi_gains_set = false;
  // common
  double d_max = 0.95;
  // fixed-duty synthetic controller
  double fixed_duty = 0.0;
};

struct CompensationConfig {
  bool enabled = false;
  double k_w = 0.01;
  double limit = 0.05;
};

struct HdcscConfig {
  bool enabled = false;
};

struct TimedValue {
  double t = 0.0;
  double value = 0.0;
};

struct ReferenceConfig {
  double value = 8000.0;          // i_ref (current mode) or u_ref (voltage mode)
  std::vector<TimedValue> steps;  // optional later setpoint changes
};

struct LoadConfig {
  std::vector<TimedValue> events;  // (time, new R_load)
};

struct EventsConfig {
  std::vector<TimedValue> drops;  // (time, module index 1-based in .value)
};

struct ClockConfig {
  double dt_plant = 2e-6;
  double t_end = 1.0;
};

struct OutputConfig {
  double rate = 10e3;            // CSV / trace sample rate, hertz
  std::vector<std::string> traces;  // empty = full default set
  double ripple_window = 0.2;    // trailing seconds for ripple/tone metrics
  double recovery_band = 0.05;   // band fraction for sag recovery
  double blowup_bound = 1e9;     // |state| guard
};

struct PlantConfig : PlantParams {
  bool r_d_auto = false;   // R_d from 4*n^2*L_lk*f_s instead of the explicit value
  bool ideal_dc_link = false;  // hold u_C1 at the nominal DC-link voltage
  bool precharge = true;       // start u_C1 at the rectified envelope value
};

struct Scenario {
  std::string name = "scenario";
  GridParams grid;
  PlantConfig plant;
  TopologyConfig topology;
  ControllerConfig controller;
  CompensationConfig compensation;
  HdcscConfig hdcsc;
  ReferenceConfig reference;
  LoadConfig load;
  EventsConfig events;
  ClockConfig clock;
  OutputConfig outputs;

  std::vector<std::string> warnings;  // non-fatal validation notes

  int module_count() const { return topology.modules_per_group * topology.groups; }
  PlantConfig plant_resolved() const;  // with R_d auto formula applied
  double nominal_dc_link_voltage() const;
  /// Control gain estimate: voltage mode n*U_i0/(L2*C2); current mode divides
  /// by the per-module effective load N*R_load.
  double resolved_b0() const;
  double reference_at(double t) const;
};

/// Canonical dump of every resolved field, used for digests and echo output.
std::string scenario_dump(const Scenario& s);

/// FNV-1a digest of the canonical dump.
std::string scenario_digest(const Scenario& s);

/// Numeric parameter access for sweeps (whitelisted dotted paths, e.g. "plant.C2").
void set_scenario_param(Scenario& s, const std::string& path, double value);
double get_scenario_param(const Scenario& s, const std::string& path);
std::vector<std::string> scenario_param_paths();

}  // namespace dcsim
