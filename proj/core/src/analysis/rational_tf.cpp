#include "dcsim/analysis/rational_tf.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dcsim {

std::complex<double> poly_eval(const std::vector<double>& coeffs, std::complex<double> s) {
  std::complex<double> acc{0.0, 0.0};
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * s + *it;
  return acc;
}

std::vector<double> poly_mul(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<double> out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

std::vector<double> poly_add(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> out(std::max(a.size(), b.size()), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

std::vector<double> poly_scale(const std::vector<double>& a, double k) {
  std::vector<double> out = a;
  for (double& c : out) c *= k;
  return out;
}

std::vector<double> poly_trim(std::vector<double> a) {
  while (a.size() > 1 && a.back() == 0.0) a.pop_back();
  return a;
}

std::complex<double> RationalTf::evaluate(std::complex<double> s) const {
  return poly_eval(num, s) / poly_eval(den, s);
}

std::complex<double> RationalTf::at_frequency_hz(double f) const {
  return evaluate(std::complex<double>{0.0, 2.0 * std::numbers::pi * f});
}

void tf_validate(const RationalTf& tf) {
  auto den = poly_trim(tf.den);
  if (den.empty() || (den.size() == 1 && den[0] == 0.0))
    throw std::invalid_argument("RationalTf: zero denominator polynomial");
}

RationalTf tf_mul(const RationalTf& a, const RationalTf& b) {
  return {poly_trim(poly_mul(a.num, b.num)), poly_trim(poly_mul(a.den, b.den))};
}

RationalTf tf_add(const RationalTf& a, const RationalTf& b) {
  return {poly_trim(poly_add(poly_mul(a.num, b.den), poly_mul(b.num, a.den))),
          poly_trim(poly_mul(a.den, b.den))};
}

RationalTf tf_scale(const RationalTf& a, double k) { return {poly_scale(a.num, k), a.den}; }

RationalTf tf_feedback(const RationalTf& g) {
  RationalTf out{g.num, poly_trim(poly_add(g.den, g.num))};
  tf_validate(out);
  return out;
}

RationalTf tf_feedback(const RationalTf& g, const RationalTf& h) {
  // G/(1+GH) = G.num*H.den / (G.den*H.den + G.num*H.num)
  RationalTf out{poly_trim(poly_mul(g.num, h.den)),
                 poly_trim(poly_add(poly_mul(g.den, h.den), poly_mul(g.num, h.num)))};
  tf_validate(out);
  return out;
}

}  // namespace dcsim
