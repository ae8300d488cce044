#include "dcsim/engine/clock.hpp"

#include <cmath>
#include <stdexcept>

namespace dcsim {

SimClock SimClock::make(double requested_dt_plant, double f_ctrl, double t_end) {
  if (!(requested_dt_plant > 0.0)) throw std::invalid_argument("SimClock: dt_plant must be positive");
  if (!(f_ctrl > 0.0)) throw std::invalid_argument("SimClock: control frequency must be positive");
  if (!(t_end > 0.0)) throw std::invalid_argument("SimClock: t_end must be positive");

  SimClock c;
  c.dt_ctrl = 1.0 / f_ctrl;
  // Never exceed the requested resolution: round the divisor up.
  c.steps_per_ctrl = static_cast<std::int64_t>(std::ceil(c.dt_ctrl / requested_dt_plant - 1e-9));
  if (c.steps_per_ctrl < 1) c.steps_per_ctrl = 1;
  c.dt_plant = c.dt_ctrl / static_cast<double>(c.steps_per_ctrl);
  c.t_end = t_end;
  c.total_steps = static_cast<std::int64_t>(std::llround(t_end / c.dt_plant));
  if (c.total_steps < 1) c.total_steps = 1;
  return c;
}

}  // namespace dcsim
