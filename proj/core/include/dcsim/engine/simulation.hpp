#pragma once

#include <map>
#include <string>
#include <vector>

#include "dcsim/engine/clock.hpp"
#include "dcsim/engine/trace.hpp"
#include "dcsim/plant/module_model.hpp"
#include "dcsim/scenario/scenario.hpp"

namespace dcsim {

/// Everything a finished run produces: the recorded traces, run metadata
/// (resolved parameters, delay quantization, active defaults), final state,
/// and energy accumulators for balance checks.
struct SimResult {
  std::vector<Trace> traces;
  std::map<std::string, std::string> metadata;

  SimClock clock;
  std::vector<PlantParams> module_params;  // after mismatch injection
  std::vector<ModuleState> final_states;
  double final_u_bus = 0.0;
  double c_bus = 0.0;

  double energy_in = 0.0;    // integral of u_rect * i_L1 over all modules
  double energy_load = 0.0;  // integral of u_bus^2 / R_load

  const Trace& trace(const std::string& name) const;
  bool has_trace(const std::string& name) const;
};

/// Runs one scenario to completion, strictly single-threaded and deterministic.
/// Throws SimulationError on state blow-up or non-finite values, with the time
/// stamp and controller diagnostics in the message.
SimResult run_simulation(const Scenario& scenario);

}  // namespace dcsim
