#include "dcsim/analysis/freq.hpp"

#include <cmath>
#include <numbers>

namespace dcsim {

std::vector<FreqPoint> freq_response(const RationalTf& tf, const std::vector<double>& f_hz) {
  tf_validate(tf);
  std::vector<FreqPoint> out;
  out.reserve(f_hz.size());

  double prev_phase = 0.0;
  bool have_prev = false;
  for (double f : f_hz) {
    FreqPoint pt;
    pt.f = f;
    const std::complex<double> s{0.0, 2.0 * std::numbers::pi * f};
    const std::complex<double> den = poly_eval(tf.den, s);
    const std::complex<double> num = poly_eval(tf.num, s);

    double den_scale = 0.0;
    double spow = 1.0;
    for (double c : tf.den) {
      den_scale += std::abs(c) * spow;
      spow *= std::abs(s);
    }
    if (std::abs(den) <= 1e-14 * den_scale) {
      pt.valid = false;
      out.push_back(pt);
      continue;
    }

    const std::complex<double> h = num / den;
    pt.magnitude_db = 20.0 * std::log10(std::abs(h));
    double phase = std::arg(h) * 180.0 / std::numbers::pi;
    if (have_prev) {
      while (phase - prev_phase > 180.0) phase -= 360.0;
      while (phase - prev_phase < -180.0) phase += 360.0;
    }
    pt.phase_deg = phase;
    prev_phase = phase;
    have_prev = true;
    out.push_back(pt);
  }
  return out;
}

std::vector<double> log_space(double f_lo, double f_hi, int points) {
  std::vector<double> out;
  if (points < 2) {
    out.push_back(f_lo);
    return out;
  }
  const double la = std::log10(f_lo), lb = std::log10(f_hi);
  out.reserve(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i)
    out.push_back(std::pow(10.0, la + (lb - la) * i / (points - 1)));
  return out;
}

}  // namespace dcsim
