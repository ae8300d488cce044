#pragma once

namespace dcsim {

/// Three-phase feed of the uncontrolled bridge rectifier.
struct GridParams {
  double u_ll_rms = 380.0;  // line-to-line RMS volts
  double f_grid = 50.0;     // hertz
  int pulses = 6;           // pulse count of the rectifier
};

/// Ideal m-pulse rectified envelope at time t: the max over the line-to-line
/// segments, sqrt(2)*u_ll*cos(theta) with theta folded into [-pi/m, pi/m).
double rectified_voltage(double t, const GridParams& grid);

/// Ripple period of the rectified envelope, 1/(m*f_grid).
double ripple_period(const GridParams& grid);

/// Mean of the rectified envelope over one ripple period (numerical quadrature).
double average_rectified_voltage(const GridParams& grid);

/// Amplitude of the component of the rectified envelope at n*f_grid, computed by
/// quadrature of the envelope against cos(n*w*t) over one grid period. Zero for
/// n not a multiple of the pulse count.
double grid_harmonic_amplitude(const GridParams& grid, int n);

/// Amplitude |b_n| of ripple harmonic k (frequency k*m*f_grid). k >= 1.
double ripple_harmonic_amplitude(const GridParams& grid, int k);

}  // namespace dcsim
