#pragma once

// Measurement harnesses shared by the unit and acceptance suites.

#include <cmath>
#include <complex>
#include <numbers>

#include "dcsim/control/ladrc.hpp"

namespace dcsim::testing {

// Steady-state frequency response of the production discrete LADRC at one
// frequency: drives one input channel with a unit sinusoid sampled at the
// control rate and projects the duty sequence onto the probe tone. Input and
// output phasors share the sample clock; the discretization itself keeps the
// sampled controller on the continuous-time transfer functions, so no hold
// correction is applied.
inline std::complex<double> measure_ladrc_response(double wc, double w0, double b0, double f_hz,
                                                   double f_s, bool drive_reference) {
  LadrcController ctl(wc, w0, b0, DutyLimits{-1e9, 1e9});
  const double dt = 1.0 / f_s;
  const double w = 2.0 * std::numbers::pi * f_hz;

  const double settle_s = std::max(0.2, 40.0 / w0);
  const auto settle = static_cast<long long>(std::ceil(settle_s / dt));
  const int periods = std::max(4, static_cast<int>(std::ceil(2.0 * f_hz)));
  const auto window = static_cast<long long>(std::llround(periods / (f_hz * dt)));

  std::complex<double> acc_u{0.0, 0.0}, acc_in{0.0, 0.0};
  double u_prev = 0.0;
  for (long long k = 0; k < settle + window; ++k) {
    const double t = k * dt;
    const double probe = std::sin(w * t);
    const double y = drive_reference ? 0.0 : probe;
    const double r = drive_reference ? probe : 0.0;
    ctl.observe(y, u_prev, dt);
    const double u = ctl.duty(r);
    u_prev = u;
    if (k >= settle) {
      const std::complex<double> e = std::polar(1.0, -w * t);
      acc_u += u * e;
      acc_in += probe * e;
    }
  }
  std::complex<double> ratio = acc_u / acc_in;
  if (!drive_reference) {
    // The controller reconstructs the sampled measurement by linear
    // interpolation; its fundamental passes with the first-order-hold gain
    // sinc^2(w*dt/2). Calibrate that known measurement-path gain out so the
    // comparison isolates the controller itself.
    const double x = 0.5 * w * dt;
    const double foh = x == 0.0 ? 1.0 : (std::sin(x) / x) * (std::sin(x) / x);
    ratio /= foh;
  }
  return ratio;
}

inline double phase_deg(std::complex<double> z) {
  return std::arg(z) * 180.0 / std::numbers::pi;
}

inline double phase_diff_deg(std::complex<double> a, std::complex<double> b) {
  double d = phase_deg(a) - phase_deg(b);
  while (d > 180.0) d -= 360.0;
  while (d < -180.0) d += 360.0;
  return d;
}

}  // namespace dcsim::testing
