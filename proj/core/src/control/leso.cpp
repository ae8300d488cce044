#include "dcsim/control/leso.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dcsim/engine/integrator.hpp"

namespace dcsim {

void Leso::update(double y, double u, double dt) {
  if (!std::isfinite(y) || !std::isfinite(u))
    throw SimulationError("Leso::update: non-finite input (y=" + std::to_string(y) +
                          ", u=" + std::to_string(u) + ")");
  if (!(dt > 0.0)) throw std::invalid_argument("Leso::update: dt must be positive");

  // Integrate the observer over the elapsed sample period. The measurement is
  // interpolated linearly between the previous and the fresh sample, and the
  // control input is extrapolated to the interval midpoint from its last two
  // samples. Holding both constant instead couples z2 into the z3 channel and
  // lags the internal control feedback by half a sample, which shifts the
  // realized controller visibly away from its continuous-time equivalent at
  // high observer bandwidths.
  const double y0 = primed_ ? y_prev_ : y;
  const double slope = primed_ ? (y - y0) / dt : 0.0;
  const double u_mid = primed_ ? 1.5 * u - 0.5 * u_prev_ : u;
  const double bu = b0_ * u_mid;

  auto f = [&](double tau, double z1, double z2, double z3, double& d1, double& d2, double& d3) {
    const double e = (y0 + slope * tau) - z1;
    d1 = g_.beta1 * e + z2;
    d2 = g_.beta2 * e + z3 + bu;
    d3 = g_.beta3 * e;
  };

  // Substep so the fastest observer mode stays well resolved at high w0.
  int substeps = static_cast<int>(std::ceil(g_.beta1 / 3.0 * dt / 0.12));
  substeps = std::clamp(substeps, 1, 8);
  const double h = dt / substeps;

  double tau = 0.0;
  for (int s = 0; s < substeps; ++s) {
    double k1[3], k2[3], k3[3], k4[3];
    f(tau, z1_, z2_, z3_, k1[0], k1[1], k1[2]);
    f(tau + 0.5 * h, z1_ + 0.5 * h * k1[0], z2_ + 0.5 * h * k1[1], z3_ + 0.5 * h * k1[2],
      k2[0], k2[1], k2[2]);
    f(tau + 0.5 * h, z1_ + 0.5 * h * k2[0], z2_ + 0.5 * h * k2[1], z3_ + 0.5 * h * k2[2],
      k3[0], k3[1], k3[2]);
    f(tau + h, z1_ + h * k3[0], z2_ + h * k3[1], z3_ + h * k3[2], k4[0], k4[1], k4[2]);
    const double w = h / 6.0;
    z1_ += w * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]);
    z2_ += w * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]);
    z3_ += w * (k1[2] + 2.0 * k2[2] + 2.0 * k3[2] + k4[2]);
    tau += h;
  }

  y_prev_ = y;
  u_prev_ = u;
  primed_ = true;
}

}  // namespace dcsim
