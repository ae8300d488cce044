#pragma once

#include "dcsim/control/gains.hpp"
#include "dcsim/control/leso.hpp"

namespace dcsim {

struct DutyLimits {
  double lo = 0.0;
  double hi = 0.95;
};

/// Second-order LADRC: PD on the observer estimates plus cancellation of the
/// estimated total disturbance, u = (kp*(r - z1) - kd*z2 - z3) / b0.
class LadrcController {
 public:
  LadrcController() = default;
  LadrcController(double wc, double w0, double b0, DutyLimits limits);

  /// Refresh kp/kd for a new controller bandwidth; observer state and observer
  /// gains are left untouched.
  void set_bandwidth(double wc);
  double bandwidth() const { return wc_; }

  /// Advance the observer with the fresh measurement y and the control input
  /// u_prev that was applied over the elapsed sample period.
  void observe(double y, double u_prev, double dt) { leso_.update(y, u_prev, dt); }

  /// Control law evaluated on the current observer state, clamped to limits.
  double duty(double reference) const;

  const Leso& observer() const { return leso_; }
  Leso& observer() { return leso_; }
  const PdGains& gains() const { return pd_; }
  DutyLimits limits() const { return limits_; }
  double b0() const { return b0_; }

 private:
  double wc_ = 0.0;
  double b0_ = 0.0;
  PdGains pd_;
  Leso leso_;
  DutyLimits limits_;
};

/// Three-state current-threshold bandwidth schedule:
///   wc = wc0 + k_s * (sign(i_o - i_c) - 1)
/// An optional hysteresis band around i_c suppresses gain chatter from
/// measurement ripple; with the band at zero the law above applies verbatim,
/// sign(0) = 0 included.
class AdaptiveBandwidth {
 public:
  AdaptiveBandwidth() = default;
  AdaptiveBandwidth(double wc0, double k_s, double i_c, double hysteresis)
      : wc0_(wc0), k_s_(k_s), i_c_(i_c), hyst_(hysteresis) {}

  double update(double i_o);

  double wc0() const { return wc0_; }
  int region() const { return region_; }

 private:
  double wc0_ = 400.0;
  double k_s_ = 100.0;
  double i_c_ = 30.0;
  double hyst_ = 0.0;
  int region_ = 1;
  bool primed_ = false;
};

/// Normalized-deviation duty compensation, clamped to +/- limit:
///   D_c = k_w * (reference - measured) / reference
double duty_compensation(double measured, double reference, double k_w, double limit);

/// Total duty D = D_L + D_c clamped into [0, d_max].
double total_duty(double d_ladrc, double d_comp, double d_max);

}  // namespace dcsim
