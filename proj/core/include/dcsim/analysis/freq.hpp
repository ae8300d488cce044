#pragma once

#include <vector>

#include "dcsim/analysis/rational_tf.hpp"

namespace dcsim {

struct FreqPoint {
  double f = 0.0;             // hertz
  double magnitude_db = 0.0;
  double phase_deg = 0.0;     // unwrapped along the sweep
  bool valid = true;          // false when the evaluation hit a pole on the axis
};

/// Frequency response of a transfer function at the given frequencies, with
/// phase unwrapped along the list. Points landing on a jw-axis pole are flagged
/// instead of crashing.
std::vector<FreqPoint> freq_response(const RationalTf& tf, const std::vector<double>& f_hz);

/// Log-spaced frequency grid, inclusive of both ends.
std::vector<double> log_space(double f_lo, double f_hi, int points);

}  // namespace dcsim
