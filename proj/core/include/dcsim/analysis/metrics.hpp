#pragma once

#include <limits>
#include <string>

#include "dcsim/engine/trace.hpp"

namespace dcsim {

constexpr double kNeverSettles = std::numeric_limits<double>::infinity();

/// Scalar figures extracted from a run.
struct Metrics {
  double settling_time = 0.0;   // seconds; +inf when the trace never settles
  double ripple_pp = 0.0;       // peak-to-peak over the trailing window
  double sag_depth = 0.0;       // output units; 0 when no load event configured
  double sag_duration = 0.0;    // seconds; +inf when the trace never recovers
  double tone_amp = 0.0;        // amplitude at tone_freq
  double tone_freq = 0.0;       // hertz
  double final_value = 0.0;
};

/// First time after which the trace never leaves target*(1 +/- band).
/// Returns +inf when the trace ends outside the band.
double settling_time(const Trace& trace, double target, double band = 0.02);

/// max - min over the trailing `window` seconds of the trace.
double ripple_pp(const Trace& trace, double window);

struct SagResult {
  double depth = 0.0;
  double duration = 0.0;
};

/// Depth below pre_level after the event and the time until the trace
/// re-enters pre_level*(1 +/- band) and stays there through the end.
SagResult sag_metrics(const Trace& trace, double event_t, double pre_level,
                      double recovery_band);

/// Amplitude of the component at frequency f: single-bin discrete Fourier
/// projection over the largest whole number of periods that fit the trace.
double tone_amplitude(const Trace& trace, double f);

}  // namespace dcsim
