#pragma once

#include <stdexcept>

namespace dcsim {

struct PdGains {
  double kp = 0.0;
  double kd = 0.0;
};

/// Bandwidth parameterization of the state-feedback gains: kp = wc^2, kd = 2*wc.
inline PdGains pd_gains(double wc) {
  if (!(wc > 0.0)) throw std::invalid_argument("pd_gains: wc must be positive");
  return {wc * wc, 2.0 * wc};
}

struct LesoGains {
  double beta1 = 0.0;
  double beta2 = 0.0;
  double beta3 = 0.0;
};

/// Observer gains placing all three observer poles at -w0:
/// (s+w0)^3 = s^3 + 3*w0*s^2 + 3*w0^2*s + w0^3.
inline LesoGains leso_gains(double w0) {
  if (!(w0 > 0.0)) throw std::invalid_argument("leso_gains: w0 must be positive");
  return {3.0 * w0, 3.0 * w0 * w0, w0 * w0 * w0};
}

}  // namespace dcsim
