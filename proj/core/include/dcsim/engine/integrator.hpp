#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace dcsim {

/// Thrown when the integrator or the simulation loop hits non-finite values.
class SimulationError : public std::runtime_error {
 public:
  explicit SimulationError(const std::string& what) : std::runtime_error(what) {}
};

/// Scratch buffers for rk4_step, reusable across steps to avoid allocation.
struct Rk4Scratch {
  std::vector<double> k1, k2, k3, k4, tmp;
  void resize(std::size_t n) {
    k1.resize(n);
    k2.resize(n);
    k3.resize(n);
    k4.resize(n);
    tmp.resize(n);
  }
};

/// Classical fixed-step 4th-order Runge-Kutta update, in place.
///
/// `derivs(t, x, dxdt)` writes the state derivative into dxdt. The update is
/// exact for states that are polynomials of degree <= 4 in t. Non-finite
/// derivative output aborts with a diagnostic naming the state index.
template <typename F>
void rk4_step(F&& derivs, double t, double dt, std::vector<double>& x, Rk4Scratch& s) {
  if (!(dt > 0.0)) throw std::invalid_argument("rk4_step: dt must be positive");
  const std::size_t n = x.size();
  s.resize(n);

  derivs(t, x, s.k1);
  for (std::size_t i = 0; i < n; ++i) s.tmp[i] = x[i] + 0.5 * dt * s.k1[i];
  derivs(t + 0.5 * dt, s.tmp, s.k2);
  for (std::size_t i = 0; i < n; ++i) s.tmp[i] = x[i] + 0.5 * dt * s.k2[i];
  derivs(t + 0.5 * dt, s.tmp, s.k3);
  for (std::size_t i = 0; i < n; ++i) s.tmp[i] = x[i] + dt * s.k3[i];
  derivs(t + dt, s.tmp, s.k4);

  const double w = dt / 6.0;
  for (std::size_t i = 0; i < n; ++i) {
    x[i] += w * (s.k1[i] + 2.0 * s.k2[i] + 2.0 * s.k3[i] + s.k4[i]);
    if (!std::isfinite(x[i])) {
      // Identify which derivative went bad for the diagnostic.
      std::size_t bad = i;
      for (std::size_t j = 0; j < n; ++j) {
        if (!std::isfinite(s.k1[j]) || !std::isfinite(s.k2[j]) || !std::isfinite(s.k3[j]) ||
            !std::isfinite(s.k4[j])) {
          bad = j;
          break;
        }
      }
      throw SimulationError("rk4_step: non-finite derivative for state index " +
                            std::to_string(bad) + " at t=" + std::to_string(t));
    }
  }
}

}  // namespace dcsim
