#pragma once

#include <complex>

#include "dcsim/plant/module_model.hpp"

namespace dcsim {

struct PlantFrequencyResponse {
  std::complex<double> duty_to_voltage;  // u_o phasor / applied duty phasor
  std::complex<double> duty_to_current;  // i_o phasor / applied duty phasor
};

/// Measures the frequency response of one averaged module around an operating
/// point by injecting a sinusoidal duty perturbation eps*sin(2*pi*f*t) on top
/// of D0. The DC link is held at u_i (the small-signal model's assumption) and
/// the duty is applied with zero-order hold at f_s. Phasors are extracted over
/// whole probe periods after `settle_s`, referenced to the held duty waveform
/// so the hold shape cancels.
PlantFrequencyResponse measure_plant_response(const PlantParams& p, double u_i, double D0,
                                              double eps, double f, double settle_s = 0.4,
                                              int periods = 6);

}  // namespace dcsim
