#pragma once

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <limits>
#include <numbers>

#include "scmad2d/topology.hpp"

namespace oracle {

constexpr double kPi = std::numbers::pi;

// 2F1(a, b; b + 1; z) = 1 + b int_0^1 t^(b-1) ((1 - z t)^(-a) - 1) dt, valid for b > -1, z < 1.
// Substituting t = u^(1/(b+1)) leaves the smooth integrand g(t) / t / (b + 1).
inline double hyp2f1_euler(double a, double b, double z) {
  boost::math::quadrature::tanh_sinh<double> integrator;
  const double p = 1.0 / (b + 1.0);
  auto f = [&](double u) {
    const double t = u > 0.0 ? std::pow(u, p) : 0.0;
    if (t == 0.0) return a * z;  // limit of g(t) / t at t = 0
    return std::expm1(-a * std::log1p(-z * t)) / t;
  };
  return 1.0 + b * p * integrator.integrate(f, 0.0, 1.0, 1e-15);
}

// int_lo^inf (1 - (1 + s x^-alpha)^-n) 2 pi x dx: mean-field interference exponent of a
// unit-density PPP beyond lo with Gamma(n) fades and per-fade scale s / n.
inline double interference_exponent(double s, double alpha, double n, double lo) {
  if (s == 0.0) return 0.0;
  boost::math::quadrature::exp_sinh<double> integrator;
  auto f = [&](double x) {
    if (x <= 0.0 || !std::isfinite(x)) return 0.0;
    const double y = s * std::pow(x, -alpha) / n;
    return -std::expm1(-n * std::log1p(y)) * 2.0 * kPi * x;
  };
  return integrator.integrate(f, lo, std::numeric_limits<double>::infinity(), 1e-13);
}

struct Field {
  double lambda_cell = 0.0;  // per-resource density of active cellular interferers
  double lambda_d2d = 0.0;   // per-resource density of active D2D interferers
};

struct Model {
  double alpha = 4.0;
  double fade_shape = 1.0;  // 1 for OFDMA, N_C for SCMA (signal approximated by Exp of mean N_C)
  double tau = 10.0;
  double p_u = 100.0;
  double p_d = 100.0;
};

// Coverage at the serving BS: signal distance from the contact law of lambda_bs,
// cellular interferers beyond the signal distance, D2D interferers anywhere.
inline double cp_bs(const Model& m, const Field& f, double lambda_bs) {
  boost::math::quadrature::exp_sinh<double> integrator;
  auto g = [&](double r) {
    if (r <= 0.0 || kPi * lambda_bs * r * r > 740.0) return 0.0;
    const double t = m.tau * std::pow(r, m.alpha) / m.p_u;
    const double e = f.lambda_cell * interference_exponent(t * m.p_u, m.alpha, m.fade_shape, r) +
                     f.lambda_d2d * interference_exponent(t * m.p_d, m.alpha, m.fade_shape, 0.0);
    return 2.0 * kPi * lambda_bs * r * std::exp(-kPi * lambda_bs * r * r - e);
  };
  return integrator.integrate(g, 0.0, std::numeric_limits<double>::infinity(), 1e-12);
}

// Coverage at the typical D2D receiver with the untruncated Rayleigh link length
// integrated over [0, tau_dis]; every interferer is unrestricted in position.
inline double cp_dr(const Model& m, const Field& f, double xi, double tau_dis) {
  auto g = [&](double r) {
    if (r <= 0.0 || kPi * xi * r * r > 740.0) return 0.0;
    const double t = m.tau * std::pow(r, m.alpha) / m.p_d;
    const double e = f.lambda_cell * interference_exponent(t * m.p_u, m.alpha, m.fade_shape, 0.0) +
                     f.lambda_d2d * interference_exponent(t * m.p_d, m.alpha, m.fade_shape, 0.0);
    return 2.0 * kPi * xi * r * std::exp(-kPi * xi * r * r - e);
  };
  if (std::isinf(tau_dis)) {
    boost::math::quadrature::exp_sinh<double> integrator;
    return integrator.integrate(g, 0.0, std::numeric_limits<double>::infinity(), 1e-12);
  }
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(g, 0.0, tau_dis, 15, 1e-12);
}

}  // namespace oracle
