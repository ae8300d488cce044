#pragma once

#include <string>

#include "dcsim/analysis/metrics.hpp"
#include "dcsim/engine/simulation.hpp"
#include "dcsim/scenario/scenario.hpp"

namespace dcsim {

struct RunReport {
  std::string digest;
  Metrics metrics;
  double wall_time_s = 0.0;

  /// Deterministic machine-readable block (never includes wall time).
  std::string canonical_text;
  /// Canonical block plus the human trailer (wall time line).
  std::string full_text;
};

/// Assembles the run report: metrics, scenario digest, and the ledger of every
/// design default that was active for this run (adaptive coefficient,
/// hysteresis band, compensation limit, damping-resistance formula, transformer
/// gain reading, control-gain estimate, delay quantization).
RunReport build_report(const Scenario& scenario, const SimResult& sim, const Metrics& metrics,
                       double wall_time_s);

/// Metrics extracted from the regulated trace: total current in current mode,
/// bus voltage in voltage mode. Sag metrics appear when a load event exists.
Metrics compute_run_metrics(const Scenario& scenario, const SimResult& sim);

}  // namespace dcsim
