#pragma once

#include <cstddef>
#include <vector>

namespace dcsim {

/// Fixed-rate signal delay line backed by a ring buffer.
///
/// The delay is quantized to a whole number of sample steps (nearest step,
/// ties away from zero), so the quantization error is below half a step.
/// Reads issued before the delay has elapsed return the initial fill value.
class DelayLine {
 public:
  DelayLine() = default;
  DelayLine(double delay_s, double sample_dt, double initial_fill = 0.0);

  /// Returns the value written `delay` ago, then stores `input` as the newest sample.
  double read_write(double input);

  std::size_t delay_steps() const { return steps_; }
  double delay_seconds() const { return static_cast<double>(steps_) * dt_; }
  double sample_dt() const { return dt_; }

  /// Nearest-step quantization used for the delay (ties away from zero).
  static std::size_t quantize_steps(double delay_s, double sample_dt);

 private:
  double dt_ = 1.0;
  std::size_t steps_ = 0;
  std::size_t head_ = 0;
  std::vector<double> ring_;
};

}  // namespace dcsim
