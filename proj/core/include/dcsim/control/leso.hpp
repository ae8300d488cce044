#pragma once

#include "dcsim/control/gains.hpp"

namespace dcsim {

/// Third-order linear extended state observer.
///
/// Estimates z1 -> output, z2 -> output rate, z3 -> total disturbance of a
/// second-order plant y'' = f + b0*u:
///   z1' = beta1*(y - z1) + z2
///   z2' = beta2*(y - z1) + z3 + b0*u
///   z3' = beta3*(y - z1)
class Leso {
 public:
  Leso() = default;
  Leso(const LesoGains& gains, double b0) : g_(gains), b0_(b0) {}

  /// Advance the observer by one sample period ending at the fresh measurement
  /// y (classical RK4 on the observer ODE; u held, y interpolated from the
  /// previous sample).
  void update(double y, double u, double dt);

  void reset(double z1 = 0.0, double z2 = 0.0, double z3 = 0.0) {
    z1_ = z1;
    z2_ = z2;
    z3_ = z3;
    primed_ = false;
  }

  double z1() const { return z1_; }
  double z2() const { return z2_; }
  double z3() const { return z3_; }
  double b0() const { return b0_; }
  const LesoGains& gains() const { return g_; }

 private:
  LesoGains g_;
  double b0_ = 1.0;
  double z1_ = 0.0, z2_ = 0.0, z3_ = 0.0;
  double y_prev_ = 0.0;
  double u_prev_ = 0.0;
  bool primed_ = false;
};

}  // namespace dcsim
