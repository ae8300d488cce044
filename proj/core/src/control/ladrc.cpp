#include "dcsim/control/ladrc.hpp"

#include <algorithm>
#include <stdexcept>

namespace dcsim {

LadrcController::LadrcController(double wc, double w0, double b0, DutyLimits limits)
    : wc_(wc), b0_(b0), pd_(pd_gains(wc)), leso_(leso_gains(w0), b0), limits_(limits) {
  if (b0 == 0.0) throw std::invalid_argument("LadrcController: b0 must be nonzero");
}

void LadrcController::set_bandwidth(double wc) {
  if (wc == wc_) return;
  wc_ = wc;
  pd_ = pd_gains(wc);
}

double LadrcController::duty(double reference) const {
  const double u = (pd_.kp * (reference - leso_.z1()) - pd_.kd * leso_.z2() - leso_.z3()) / b0_;
  return std::clamp(u, limits_.lo, limits_.hi);
}

double AdaptiveBandwidth::update(double i_o) {
  int sgn;
  const double d = i_o - i_c_;
  if (hyst_ <= 0.0) {
    sgn = (d > 0.0) - (d < 0.0);
  } else {
    const double half = 0.5 * hyst_;
    if (!primed_) {
      sgn = (d > 0.0) - (d < 0.0);
    } else if (d > half) {
      sgn = 1;
    } else if (d < -half) {
      sgn = -1;
    } else {
      sgn = region_;  // hold inside the band
    }
  }
  primed_ = true;
  region_ = sgn;
  return wc0_ + k_s_ * (static_cast<double>(sgn) - 1.0);
}

double duty_compensation(double measured, double reference, double k_w, double limit) {
  if (!(reference > 0.0)) throw std::invalid_argument("duty_compensation: reference must be positive");
  const double dc = k_w * (reference - measured) / reference;
  return std::clamp(dc, -limit, limit);
}

double total_duty(double d_ladrc, double d_comp, double d_max) {
  return std::clamp(d_ladrc + d_comp, 0.0, d_max);
}

}  // namespace dcsim
