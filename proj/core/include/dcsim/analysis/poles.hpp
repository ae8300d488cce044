#pragma once

#include <complex>
#include <vector>

#include "dcsim/analysis/rational_tf.hpp"

namespace dcsim {

/// Roots of a real-coefficient polynomial (ascending coefficients), sorted by
/// real part then imaginary part. Degrees 1-3 use closed forms; higher degrees
/// use a scaled companion-matrix eigenvalue computation with Newton polish.
std::vector<std::complex<double>> poly_roots(const std::vector<double>& coeffs);

/// Poles of a transfer function: roots of its denominator.
std::vector<std::complex<double>> poles(const RationalTf& tf);

struct StabilityResult {
  bool stable = false;
  bool degenerate = false;  // 1 + G collapsed to (near) zero polynomial
  std::vector<std::complex<double>> closed_loop_poles;
};

/// Unity-feedback closed-loop stability of an open-loop transfer function:
/// poles of G/(1+G), stable iff all real parts are negative.
StabilityResult stability_check(const RationalTf& open_loop);

}  // namespace dcsim
