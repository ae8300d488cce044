#pragma once

#include <complex>
#include <vector>

namespace dcsim {

/// Ratio of two real-coefficient polynomials in s, coefficients in ascending
/// powers. Common factors are never cancelled.
struct RationalTf {
  std::vector<double> num;
  std::vector<double> den;

  std::complex<double> evaluate(std::complex<double> s) const;
  std::complex<double> at_frequency_hz(double f) const;

  int num_degree() const { return static_cast<int>(num.size()) - 1; }
  int den_degree() const { return static_cast<int>(den.size()) - 1; }
};

/// Evaluate a polynomial (ascending coefficients) at complex s by Horner's rule.
std::complex<double> poly_eval(const std::vector<double>& coeffs, std::complex<double> s);

std::vector<double> poly_mul(const std::vector<double>& a, const std::vector<double>& b);
std::vector<double> poly_add(const std::vector<double>& a, const std::vector<double>& b);
std::vector<double> poly_scale(const std::vector<double>& a, double k);
/// Drop high-order coefficients that are exactly zero (keeps at least one).
std::vector<double> poly_trim(std::vector<double> a);

RationalTf tf_mul(const RationalTf& a, const RationalTf& b);
RationalTf tf_add(const RationalTf& a, const RationalTf& b);
RationalTf tf_scale(const RationalTf& a, double k);
/// Unity-feedback closure G/(1+G).
RationalTf tf_feedback(const RationalTf& g);
/// General closure G/(1+G*H).
RationalTf tf_feedback(const RationalTf& g, const RationalTf& h);

/// Validates den is a usable polynomial (nonzero leading coefficient after trim).
void tf_validate(const RationalTf& tf);

}  // namespace dcsim
