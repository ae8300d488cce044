#pragma once

#include <array>

#include "dcsim/analysis/rational_tf.hpp"

namespace dcsim {

/// Continuous-time equivalent of the LADRC feedback path (measurement to duty):
///   G_c(s) = [(kp*b1 + kd*b2 + b3)s^2 + (kp*b2 + kd*b3)s + kp*b3]
///            / (b0 * s * [s^2 + (kd + b1)s + kd*b1 + kp + b2])
RationalTf controller_tf(double kp, double kd, double beta1, double beta2, double beta3,
                         double b0);

/// Reference prefilter with unity DC gain:
///   G_F(s) = kp * (s^3 + b1*s^2 + b2*s + b3) / numerator(G_c) (without the 1/b0)
RationalTf prefilter_tf(double kp, double kd, double beta1, double beta2, double beta3);

/// Observer transfer matrix over the common denominator N(s) = (s + w0)^3:
/// rows z1, z2, z3; columns u, y.
std::array<std::array<RationalTf, 2>, 3> leso_tf_matrix(double beta1, double beta2,
                                                        double beta3, double b0);

}  // namespace dcsim
