#include "dcsim/plant/small_signal.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace dcsim {

PlantFrequencyResponse measure_plant_response(const PlantParams& p, double u_i, double D0,
                                              double eps, double f, double settle_s,
                                              int periods) {
  if (!(f > 0.0)) throw std::invalid_argument("measure_plant_response: f must be positive");
  if (periods < 1) throw std::invalid_argument("measure_plant_response: periods must be >= 1");

  const double dt_ctrl = 1.0 / p.f_s;
  // Resolve both the probe tone and the plant poles comfortably.
  const int sub = 32;
  const double dt = dt_ctrl / sub;

  // The slowest pole sits near (R_d + R_load)/L2; wait it out before measuring.
  const double slow_tau = p.L2 / (p.R_d + p.R_load);
  settle_s = std::max(settle_s, 10.0 * slow_tau);

  double i_L2 = 0.0;
  double u_bus = 0.0;
  double duty = D0;

  auto derivs = [&](double il, double ub, double d, double& dil, double& dub) {
    dil = (d * p.n * u_i - ub - p.R_d * il) / p.L2;
    dub = (il - ub / p.R_load) / p.C2;
  };

  auto step = [&](double d) {
    double k1i, k1u, k2i, k2u, k3i, k3u, k4i, k4u;
    derivs(i_L2, u_bus, d, k1i, k1u);
    derivs(i_L2 + 0.5 * dt * k1i, u_bus + 0.5 * dt * k1u, d, k2i, k2u);
    derivs(i_L2 + 0.5 * dt * k2i, u_bus + 0.5 * dt * k2u, d, k3i, k3u);
    derivs(i_L2 + dt * k3i, u_bus + dt * k3u, d, k4i, k4u);
    i_L2 += dt / 6.0 * (k1i + 2.0 * k2i + 2.0 * k3i + k4i);
    u_bus += dt / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
  };

  const auto settle_steps = static_cast<long long>(std::ceil(settle_s / dt));
  const auto window_steps =
      static_cast<long long>(std::llround(periods / (f * dt)));

  const double w = 2.0 * std::numbers::pi * f;
  std::complex<double> acc_u{0.0, 0.0}, acc_i{0.0, 0.0}, acc_d{0.0, 0.0};

  long long k = 0;
  const long long total = settle_steps + window_steps;
  for (; k < total; ++k) {
    const double t = k * dt;
    if (k % sub == 0) duty = D0 + eps * std::sin(w * t);  // ZOH update at f_s
    if (k >= settle_steps) {
      const std::complex<double> e = std::polar(1.0, -w * t);
      acc_u += u_bus * e;
      acc_i += (u_bus / p.R_load) * e;  // load current
      acc_d += duty * e;
    }
    step(duty);
  }

  PlantFrequencyResponse resp;
  resp.duty_to_voltage = acc_u / acc_d;
  resp.duty_to_current = acc_i / acc_d;
  return resp;
}

}  // namespace dcsim
