#pragma once

#include "dcsim/analysis/rational_tf.hpp"
#include "dcsim/plant/grid.hpp"

namespace dcsim {

/// Electrical parameters of one AC-DC-DC module: six-pulse rectifier into an
/// L1/C1 DC link, averaged phase-shifted full-bridge with transformer gain n,
/// and the L2 output inductor feeding the shared bus.
struct PlantParams {
  double n = 1.0 / 1.5;   // transformer voltage gain, secondary/primary
  double L_lk = 30e-6;    // henries, transformer leakage
  double L1 = 3200e-6;    // henries, DC-link inductor
  double C1 = 3000e-6;    // farads, DC-link capacitor
  double L2 = 3000e-6;    // henries, output filter inductor
  double C2 = 3500e-6;    // farads, output filter capacitor (per module)
  double R_d = 0.0;       // ohms, bridge damping / duty-loss equivalent resistance
  double R_s = 0.01;      // ohms, DC-link series resistance
  double f_s = 15e3;      // hertz, switching / controller frequency
  double R_load = 0.01;   // ohms, load on the shared output bus
  bool duty_loss_enabled = false;  // leakage-inductance duty loss on/off
};

/// Conventional full-bridge equivalent damping, 4*n^2*L_lk*f_s.
double default_damping_resistance(const PlantParams& p);

/// Dynamic state of one module; the shared bus voltage lives in BusModel.
struct ModuleState {
  double i_L1 = 0.0;  // amperes through L1 (rectifier side, diode-fed)
  double u_C1 = 0.0;  // volts on the DC link (u_i)
  double i_L2 = 0.0;  // amperes through L2 into the bus
};

/// Shared output bus: all module output capacitors lumped together.
struct BusModel {
  double C_bus = 0.0;   // farads, sum of C2 over active modules
  double R_load = 0.0;  // ohms
  double u_bus = 0.0;   // volts (u_o)
};

struct ModuleDerivatives {
  double di_L1 = 0.0;
  double du_C1 = 0.0;
  double di_L2 = 0.0;
  double i_inj = 0.0;  // current delivered into the bus (= i_L2)
};

/// Averaged-model state derivatives for one module. Implements the blocking
/// diode on the rectifier side (i_L1 >= 0) and the averaged bridge power
/// balance: inverter draws D_eff*n*i_L2 from the DC link and impresses
/// D_eff*n*u_C1 behind L2.
ModuleDerivatives module_derivatives(const ModuleState& s, double u_bus, double D_eff,
                                     double t, const PlantParams& p, const GridParams& g);

/// Duty lost to the leakage inductance commutation, 4*L_lk*f_s*i_L2/(n*u_C1).
double duty_loss(double i_L2, double u_C1, const PlantParams& p);

/// Secondary-side effective duty: D minus the leakage duty loss when enabled,
/// clamped to [0, D]. Returns 0 for u_C1 <= 0 (sets *flagged if provided).
double effective_duty(double D, double i_L2, double u_C1, const PlantParams& p,
                      bool* flagged = nullptr);

/// Small-signal duty-to-output-voltage transfer function at DC-link voltage U_i:
///   n*U_i / (L2*C2*s^2 + (L2/R_1 + R_d*C2)*s + R_d/R_1 + 1)
RationalTf duty_to_voltage_tf(const PlantParams& p, double U_i);

/// Small-signal duty-to-output-current transfer function (voltage TF over R_load).
RationalTf duty_to_current_tf(const PlantParams& p, double U_i);

}  // namespace dcsim
