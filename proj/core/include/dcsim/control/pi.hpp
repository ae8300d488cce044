#pragma once

#include "dcsim/control/ladrc.hpp"  // DutyLimits

namespace dcsim {

/// Plain PI controller with conditional-integration anti-windup: the integral
/// freezes while the output saturates in the same direction as the error.
class PiController {
 public:
  PiController() = default;
  PiController(double kp, double ki, DutyLimits limits)
      : kp_(kp), ki_(ki), limits_(limits) {}

  double step(double error, double dt);

  void reset(double integral = 0.0) { integral_ = integral; }
  double integral() const { return integral_; }
  double kp() const { return kp_; }
  double ki() const { return ki_; }

 private:
  double kp_ = 0.0;
  double ki_ = 0.0;
  double integral_ = 0.0;
  DutyLimits limits_;
};

}  // namespace dcsim
