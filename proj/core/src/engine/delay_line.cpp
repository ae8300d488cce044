#include "dcsim/engine/delay_line.hpp"

#include <cmath>
#include <stdexcept>

namespace dcsim {

std::size_t DelayLine::quantize_steps(double delay_s, double sample_dt) {
  if (sample_dt <= 0.0) throw std::invalid_argument("DelayLine: sample_dt must be positive");
  if (delay_s < 0.0) throw std::invalid_argument("DelayLine: delay must be non-negative");
  // The tiny upward nudge keeps exact half-step ties rounding away from zero
  // even when the quotient lands just below .5 in floating point.
  const double ratio = delay_s / sample_dt * (1.0 + 8.0 * 2.220446049250313e-16);
  return static_cast<std::size_t>(std::llround(ratio));
}

DelayLine::DelayLine(double delay_s, double sample_dt, double initial_fill)
    : dt_(sample_dt),
      steps_(quantize_steps(delay_s, sample_dt)),
      head_(0),
      ring_(steps_ + 1, initial_fill) {}

double DelayLine::read_write(double input) {
  ring_[head_] = input;
  // The sample written `steps_` calls ago sits one slot past the head in a
  // (steps_+1)-sized ring; with steps_ == 0 that slot is the head itself.
  std::size_t tail = head_ + 1 == ring_.size() ? 0 : head_ + 1;
  double out = ring_[tail];
  head_ = tail;
  return out;
}

}  // namespace dcsim
