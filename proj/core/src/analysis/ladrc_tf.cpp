#include "dcsim/analysis/ladrc_tf.hpp"

#include <stdexcept>

namespace dcsim {

RationalTf controller_tf(double kp, double kd, double beta1, double beta2, double beta3,
                         double b0) {
  if (b0 == 0.0) throw std::invalid_argument("controller_tf: b0 must be nonzero");
  const double a2 = kp * beta1 + kd * beta2 + beta3;
  const double a1 = kp * beta2 + kd * beta3;
  const double a0 = kp * beta3;
  // b0 * s * (s^2 + (kd+b1)s + kd*b1 + kp + b2)
  const double c1 = kd * beta1 + kp + beta2;
  const double c2 = kd + beta1;
  return {{a0, a1, a2}, {0.0, b0 * c1, b0 * c2, b0}};
}

RationalTf prefilter_tf(double kp, double kd, double beta1, double beta2, double beta3) {
  const double a2 = kp * beta1 + kd * beta2 + beta3;
  const double a1 = kp * beta2 + kd * beta3;
  const double a0 = kp * beta3;
  return {{kp * beta3, kp * beta2, kp * beta1, kp}, {a0, a1, a2}};
}

std::array<std::array<RationalTf, 2>, 3> leso_tf_matrix(double beta1, double beta2,
                                                        double beta3, double b0) {
  const std::vector<double> n = {beta3, beta2, beta1, 1.0};
  std::array<std::array<RationalTf, 2>, 3> m;
  m[0][0] = {{0.0, b0}, n};                    // z1 <- u : b0*s / N
  m[0][1] = {{beta3, beta2, beta1}, n};        // z1 <- y : (b1*s^2 + b2*s + b3) / N
  m[1][0] = {{0.0, b0 * beta1, b0}, n};        // z2 <- u : (b0*s^2 + b0*b1*s) / N
  m[1][1] = {{0.0, beta3, beta2}, n};          // z2 <- y : (b2*s^2 + b3*s) / N
  m[2][0] = {{-b0 * beta3}, n};                // z3 <- u : -b0*b3 / N
  m[2][1] = {{0.0, 0.0, beta3}, n};            // z3 <- y : b3*s^2 / N
  return m;
}

}  // namespace dcsim
