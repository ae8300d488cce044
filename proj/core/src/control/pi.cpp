#include "dcsim/control/pi.hpp"

#include <algorithm>

namespace dcsim {

double PiController::step(double error, double dt) {
  double u = kp_ * error + integral_;
  const bool sat_hi = u > limits_.hi && error > 0.0;
  const bool sat_lo = u < limits_.lo && error < 0.0;
  if (!sat_hi && !sat_lo) {
    integral_ += ki_ * error * dt;
    u = kp_ * error + integral_;
  }
  return std::clamp(u, limits_.lo, limits_.hi);
}

}  // namespace dcsim
