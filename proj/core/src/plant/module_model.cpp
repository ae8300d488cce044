#include "dcsim/plant/module_model.hpp"

#include <cmath>
#include <stdexcept>

namespace dcsim {

double default_damping_resistance(const PlantParams& p) {
  return 4.0 * p.n * p.n * p.L_lk * p.f_s;
}

ModuleDerivatives module_derivatives(const ModuleState& s, double u_bus, double D_eff,
                                     double t, const PlantParams& p, const GridParams& g) {
  ModuleDerivatives d;
  const double u_rect = rectified_voltage(t, g);

  d.di_L1 = (u_rect - s.u_C1 - p.R_s * s.i_L1) / p.L1;
  if (s.i_L1 <= 0.0 && d.di_L1 < 0.0) d.di_L1 = 0.0;  // blocking diode

  const double i_inv = D_eff * p.n * s.i_L2;  // averaged bridge input current
  d.du_C1 = (s.i_L1 - i_inv) / p.C1;

  d.di_L2 = (D_eff * p.n * s.u_C1 - u_bus - p.R_d * s.i_L2) / p.L2;
  d.i_inj = s.i_L2;
  return d;
}

double duty_loss(double i_L2, double u_C1, const PlantParams& p) {
  if (u_C1 <= 0.0) return 0.0;
  return 4.0 * p.L_lk * p.f_s * std::max(i_L2, 0.0) / (p.n * u_C1);
}

double effective_duty(double D, double i_L2, double u_C1, const PlantParams& p, bool* flagged) {
  if (flagged) *flagged = false;
  if (u_C1 <= 0.0) {
    if (flagged) *flagged = true;
    return 0.0;
  }
  if (!p.duty_loss_enabled) return D;
  return std::max(0.0, D - duty_loss(i_L2, u_C1, p));
}

RationalTf duty_to_voltage_tf(const PlantParams& p, double U_i) {
  if (!(p.L2 > 0.0 && p.C2 > 0.0 && p.R_load > 0.0))
    throw std::invalid_argument("duty_to_voltage_tf: L2, C2, R_load must be positive");
  return {{p.n * U_i},
          {p.R_d / p.R_load + 1.0, p.L2 / p.R_load + p.R_d * p.C2, p.L2 * p.C2}};
}

RationalTf duty_to_current_tf(const PlantParams& p, double U_i) {
  return tf_scale(duty_to_voltage_tf(p, U_i), 1.0 / p.R_load);
}

}  // namespace dcsim
