#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace dcsim {

/// Uniformly sampled named time series.
struct Trace {
  std::string name;
  double t0 = 0.0;
  double dt = 0.0;
  std::vector<double> samples;

  std::size_t size() const { return samples.size(); }
  bool empty() const { return samples.empty(); }

  double time(std::size_t i) const { return t0 + static_cast<double>(i) * dt; }
  double at(std::size_t i) const { return samples.at(i); }
  double back() const { return samples.back(); }
  double t_end() const {
    return samples.empty() ? t0 : time(samples.size() - 1);
  }

  /// Index of the first sample at or after time t (clamped to the valid range).
  std::size_t index_at(double t) const {
    if (samples.empty()) throw std::out_of_range("Trace::index_at on empty trace");
    if (t <= t0) return 0;
    double k = (t - t0) / dt;
    auto i = static_cast<std::size_t>(k);
    if (static_cast<double>(i) < k) ++i;
    return i >= samples.size() ? samples.size() - 1 : i;
  }

  /// Copy of the trailing segment starting at time t.
  Trace tail_from(double t) const {
    std::size_t i = index_at(t);
    Trace out;
    out.name = name;
    out.dt = dt;
    out.t0 = time(i);
    out.samples.assign(samples.begin() + static_cast<std::ptrdiff_t>(i), samples.end());
    return out;
  }
};

}  // namespace dcsim
