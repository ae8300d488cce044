#pragma once

#include <cstdint>

namespace dcsim {

/// Fixed-step timing for one run: plant integration step, controller sample
/// period, and end time. The controller period is always an exact integer
/// multiple of the plant step; `make` shrinks the requested plant step to the
/// nearest exact divisor of the controller period.
struct SimClock {
  double dt_plant = 0.0;
  double dt_ctrl = 0.0;
  double t_end = 0.0;
  std::int64_t steps_per_ctrl = 0;
  std::int64_t total_steps = 0;

  static SimClock make(double requested_dt_plant, double f_ctrl, double t_end);

  double time_of(std::int64_t step) const { return static_cast<double>(step) * dt_plant; }
};

}  // namespace dcsim
