#include "dcsim/analysis/poles.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dcsim {

namespace {

using cplx = std::complex<double>;

void sort_roots(std::vector<cplx>& r) {
  std::sort(r.begin(), r.end(), [](const cplx& a, const cplx& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
}

std::vector<cplx> quadratic_roots(double c0, double c1, double c2) {
  // c2*x^2 + c1*x + c0, c2 != 0
  const double disc = c1 * c1 - 4.0 * c2 * c0;
  if (disc >= 0.0) {
    const double q = -0.5 * (c1 + std::copysign(std::sqrt(disc), c1));
    double r1, r2;
    if (q != 0.0) {
      r1 = q / c2;
      r2 = c0 / q;
    } else {
      r1 = r2 = 0.0;
    }
    return {cplx{r1, 0.0}, cplx{r2, 0.0}};
  }
  const double re = -c1 / (2.0 * c2);
  const double im = std::sqrt(-disc) / (2.0 * c2);
  return {cplx{re, im}, cplx{re, -im}};
}

std::vector<cplx> cubic_roots(double c0, double c1, double c2, double c3) {
  // Normalize to x^3 + a*x^2 + b*x + c and depress with x = t - a/3.
  const double a = c2 / c3, b = c1 / c3, c = c0 / c3;
  const double p = b - a * a / 3.0;
  const double q = c - a * b / 3.0 + 2.0 * a * a * a / 27.0;
  const double shift = -a / 3.0;

  const double scale = std::max({std::abs(b), a * a / 3.0, 1e-300});
  const double qscale = std::max({std::abs(c), std::abs(a * b) / 3.0, 1e-300});
  // Triple (or near-triple) root: depressed cubic collapses to t^3 = 0.
  if (std::abs(p) <= 4.0 * 2.220446049250313e-16 * scale &&
      std::abs(q) <= 4.0 * 2.220446049250313e-16 * qscale) {
    return {cplx{shift, 0.0}, cplx{shift, 0.0}, cplx{shift, 0.0}};
  }

  const double disc = -4.0 * p * p * p - 27.0 * q * q;
  std::vector<cplx> roots;
  if (disc >= 0.0) {
    // Three real roots, trigonometric form.
    const double m = 2.0 * std::sqrt(-p / 3.0);
    const double arg = std::clamp(3.0 * q / (p * m), -1.0, 1.0);
    const double phi = std::acos(arg) / 3.0;
    for (int k = 0; k < 3; ++k) {
      const double t = m * std::cos(phi - 2.0 * std::numbers::pi * k / 3.0);
      roots.emplace_back(shift + t, 0.0);
    }
  } else {
    // One real root via Cardano, then deflate to a quadratic.
    const double u = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
    const double t = std::cbrt(-q / 2.0 + u) + std::cbrt(-q / 2.0 - u);
    // One Newton step sharpens the real root before deflation.
    double x = shift + t;
    for (int it = 0; it < 2; ++it) {
      const double f = ((c3 * x + c2) * x + c1) * x + c0;
      const double fp = (3.0 * c3 * x + 2.0 * c2) * x + c1;
      if (fp != 0.0) x -= f / fp;
    }
    roots.emplace_back(x, 0.0);
    // Synthetic division by (x - root).
    const double b2 = c3;
    const double b1 = c2 + b2 * x;
    const double b0 = c1 + b1 * x;
    auto rest = quadratic_roots(b0, b1, b2);
    roots.insert(roots.end(), rest.begin(), rest.end());
  }
  return roots;
}

std::vector<cplx> companion_roots(const std::vector<double>& coeffs) {
  const int n = static_cast<int>(coeffs.size()) - 1;
  // Scale the variable by rho to tame wide coefficient spreads.
  double rho = 1.0;
  if (coeffs.front() != 0.0)
    rho = std::pow(std::abs(coeffs.front() / coeffs.back()), 1.0 / n);
  if (!(rho > 0.0) || !std::isfinite(rho)) rho = 1.0;

  std::vector<double> b(coeffs.size());
  double rp = 1.0;
  for (int i = 0; i <= n; ++i) {
    b[static_cast<std::size_t>(i)] = coeffs[static_cast<std::size_t>(i)] * rp;
    rp *= rho;
  }
  const double lead = b.back();

  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) comp(i, n - 1) = -b[static_cast<std::size_t>(i)] / lead;

  Eigen::EigenSolver<Eigen::MatrixXd> solver(comp, false);
  std::vector<cplx> roots;
  roots.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    cplx r = solver.eigenvalues()(i) * rho;
    // One Newton polish step on the original polynomial.
    for (int it = 0; it < 2; ++it) {
      cplx f{0.0, 0.0}, fp{0.0, 0.0};
      for (int j = n; j >= 0; --j) {
        fp = fp * r + f;
        f = f * r + coeffs[static_cast<std::size_t>(j)];
      }
      if (std::abs(fp) > 0.0) {
        const cplx step = f / fp;
        if (std::abs(step) < 0.5 * (1.0 + std::abs(r))) r -= step;
      }
    }
    roots.push_back(r);
  }
  return roots;
}

}  // namespace

std::vector<cplx> poly_roots(const std::vector<double>& coeffs_in) {
  std::vector<double> c = poly_trim(coeffs_in);
  if (c.size() < 2 || c.back() == 0.0)
    throw std::invalid_argument("poly_roots: polynomial degree must be >= 1");

  std::vector<cplx> roots;
  const int deg = static_cast<int>(c.size()) - 1;
  switch (deg) {
    case 1:
      roots = {cplx{-c[0] / c[1], 0.0}};
      break;
    case 2:
      roots = quadratic_roots(c[0], c[1], c[2]);
      break;
    case 3:
      roots = cubic_roots(c[0], c[1], c[2], c[3]);
      break;
    default:
      roots = companion_roots(c);
      break;
  }
  sort_roots(roots);
  return roots;
}

std::vector<cplx> poles(const RationalTf& tf) {
  tf_validate(tf);
  return poly_roots(tf.den);
}

StabilityResult stability_check(const RationalTf& open_loop) {
  StabilityResult res;
  std::vector<double> den_cl = poly_trim(poly_add(open_loop.den, open_loop.num));

  double scale = 0.0;
  for (double v : open_loop.den) scale = std::max(scale, std::abs(v));
  for (double v : open_loop.num) scale = std::max(scale, std::abs(v));
  double mag = 0.0;
  for (double v : den_cl) mag = std::max(mag, std::abs(v));
  if (den_cl.size() < 2 || mag <= 1e-12 * scale) {
    res.degenerate = true;
    return res;
  }

  res.closed_loop_poles = poly_roots(den_cl);
  res.stable = true;
  for (const auto& p : res.closed_loop_poles)
    if (!(p.real() < 0.0)) res.stable = false;
  return res;
}

}  // namespace dcsim
