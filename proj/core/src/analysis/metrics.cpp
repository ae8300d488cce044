#include "dcsim/analysis/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace dcsim {

double settling_time(const Trace& trace, double target, double band) {
  if (trace.empty()) throw std::invalid_argument("settling_time: empty trace");
  if (!(band > 0.0 && band < 0.5)) throw std::invalid_argument("settling_time: band out of (0, 0.5)");
  const double tol = band * std::abs(target);

  // Walk backwards to the last sample outside the band.
  std::ptrdiff_t last_out = -1;
  for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(trace.size()) - 1; i >= 0; --i) {
    if (std::abs(trace.samples[static_cast<std::size_t>(i)] - target) > tol) {
      last_out = i;
      break;
    }
  }
  if (last_out < 0) return 0.0;
  if (last_out == static_cast<std::ptrdiff_t>(trace.size()) - 1) return kNeverSettles;
  return trace.time(static_cast<std::size_t>(last_out + 1));
}

double ripple_pp(const Trace& trace, double window) {
  if (trace.size() < 2) throw std::invalid_argument("ripple_pp: trace too short");
  const double span = trace.t_end() - trace.t0;
  if (window > span + 0.5 * trace.dt)
    throw std::invalid_argument("ripple_pp: window longer than trace");
  const std::size_t first = trace.index_at(trace.t_end() - window);
  double lo = trace.samples[first], hi = trace.samples[first];
  for (std::size_t i = first; i < trace.size(); ++i) {
    lo = std::min(lo, trace.samples[i]);
    hi = std::max(hi, trace.samples[i]);
  }
  return hi - lo;
}

SagResult sag_metrics(const Trace& trace, double event_t, double pre_level,
                      double recovery_band) {
  if (trace.empty()) throw std::invalid_argument("sag_metrics: empty trace");
  if (event_t < trace.t0 || event_t > trace.t_end())
    throw std::invalid_argument("sag_metrics: event time outside trace");

  const std::size_t ev = trace.index_at(event_t);
  double min_after = trace.samples[ev];
  for (std::size_t i = ev; i < trace.size(); ++i) min_after = std::min(min_after, trace.samples[i]);

  SagResult res;
  res.depth = std::max(0.0, pre_level - min_after);

  const double tol = recovery_band * std::abs(pre_level);
  std::ptrdiff_t last_out = -1;
  for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(trace.size()) - 1;
       i >= static_cast<std::ptrdiff_t>(ev); --i) {
    if (std::abs(trace.samples[static_cast<std::size_t>(i)] - pre_level) > tol) {
      last_out = i;
      break;
    }
  }
  if (last_out < 0) {
    res.duration = 0.0;  // never left the band
  } else if (last_out == static_cast<std::ptrdiff_t>(trace.size()) - 1) {
    res.duration = kNeverSettles;
  } else {
    res.duration = trace.time(static_cast<std::size_t>(last_out + 1)) - event_t;
  }
  return res;
}

double tone_amplitude(const Trace& trace, double f) {
  if (!(f > 0.0)) throw std::invalid_argument("tone_amplitude: frequency must be positive");
  if (trace.size() < 2) throw std::invalid_argument("tone_amplitude: trace too short");
  const double span = (trace.size() - 1) * trace.dt;
  const double periods = span * f;
  if (periods < 3.0)
    throw std::invalid_argument("tone_amplitude: trace shorter than 3 periods of f");

  // Truncate to a whole number of periods.
  const double whole = std::floor(periods);
  auto n = static_cast<std::size_t>(std::floor(whole / (f * trace.dt) + 0.5));
  n = std::min(n, trace.size());

  std::complex<double> acc{0.0, 0.0};
  const double w = 2.0 * std::numbers::pi * f * trace.dt;
  for (std::size_t i = 0; i < n; ++i)
    acc += trace.samples[i] * std::polar(1.0, -w * static_cast<double>(i));
  return 2.0 * std::abs(acc) / static_cast<double>(n);
}

}  // namespace dcsim
