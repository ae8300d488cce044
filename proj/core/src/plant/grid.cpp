#include "dcsim/plant/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dcsim {

namespace {

constexpr double kPi = std::numbers::pi;

// Composite Simpson over [a, b]. The integrands here are smooth inside one
// rectifier segment, so a moderate panel count reaches ~1e-12.
template <typename F>
double simpson(F&& f, double a, double b, int panels) {
  const double h = (b - a) / (2.0 * panels);
  double acc = f(a) + f(b);
  for (int i = 1; i < 2 * panels; ++i) acc += f(a + h * i) * (i % 2 ? 4.0 : 2.0);
  return acc * h / 3.0;
}

}  // namespace

double ripple_period(const GridParams& grid) {
  return 1.0 / (grid.pulses * grid.f_grid);
}

double rectified_voltage(double t, const GridParams& grid) {
  if (grid.pulses < 2) throw std::invalid_argument("rectified_voltage: pulse count must be >= 2");
  const double peak = std::sqrt(2.0) * grid.u_ll_rms;
  const double seg = 2.0 * kPi / grid.pulses;  // electrical angle per segment
  double theta = std::fmod(2.0 * kPi * grid.f_grid * t, seg);
  if (theta < 0.0) theta += seg;
  return peak * std::cos(theta - 0.5 * seg);
}

double average_rectified_voltage(const GridParams& grid) {
  const double tp = ripple_period(grid);
  const double val = simpson([&](double t) { return rectified_voltage(t, grid); },
                             0.0, tp, 2048);
  return val / tp;
}

double grid_harmonic_amplitude(const GridParams& grid, int n) {
  if (n < 1) throw std::invalid_argument("grid_harmonic_amplitude: n must be >= 1");
  const double w = 2.0 * kPi * grid.f_grid;
  const double tg = 1.0 / grid.f_grid;
  // Integrate segment by segment so the envelope corners land on panel edges.
  const int m = grid.pulses;
  const double tseg = tg / m;
  double c = 0.0, s = 0.0;
  for (int k = 0; k < m; ++k) {
    const double a = k * tseg, b = (k + 1) * tseg;
    c += simpson([&](double t) { return rectified_voltage(t, grid) * std::cos(n * w * t); },
                 a, b, 512);
    s += simpson([&](double t) { return rectified_voltage(t, grid) * std::sin(n * w * t); },
                 a, b, 512);
  }
  c *= 2.0 / tg;
  s *= 2.0 / tg;
  return std::hypot(c, s);
}

double ripple_harmonic_amplitude(const GridParams& grid, int k) {
  if (k < 1) throw std::invalid_argument("ripple_harmonic_amplitude: k must be >= 1");
  return grid_harmonic_amplitude(grid, k * grid.pulses);
}

}  // namespace dcsim
