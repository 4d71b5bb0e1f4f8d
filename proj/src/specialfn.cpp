#include "scmad2d/specialfn.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "scmad2d/error.hpp"

namespace scmad2d {

namespace {

constexpr long kSeriesBudget = 20'000'000;
constexpr double kSeriesRelTol = 1e-16;

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::nearbyint(x); }

// Plain Gauss series, |x| < 1. The stopping rule bounds the remaining tail by
// a geometric series with ratio max(|r_k|, |x|), which is valid once the
// Pochhammer factors have fixed sign and |r_k| is monotone in k.
double gauss_series(double a, double b, double c, double x) {
  double sum = 1.0;
  double term = 1.0;
  const double settle = std::fabs(a) + std::fabs(b) + std::fabs(c) + 2.0;
  for (long k = 0; k < kSeriesBudget; ++k) {
    const double kd = static_cast<double>(k);
    const double ratio = (a + kd) * (b + kd) / ((c + kd) * (kd + 1.0)) * x;
    term *= ratio;
    if (term == 0.0) return sum;  // terminating series
    sum += term;
    if (kd > settle) {
      const double rho = std::max(std::fabs(ratio), std::fabs(x));
      if (rho < 1.0) {
        const double tail = std::fabs(term) * rho / (1.0 - rho);
        if (tail <= kSeriesRelTol * std::max(1.0, std::fabs(sum))) return sum;
      }
    }
  }
  std::ostringstream msg;
  msg << "hyp2f1: series did not converge for (a=" << a << ", b=" << b << ", c=" << c
      << ", x=" << x << ")";
  throw NumericError(msg.str());
}

}  // namespace

double hyp2f1(double a, double b, double c, double z) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || !std::isfinite(z))
    throw DomainError("hyp2f1: non-finite argument");
  if (is_nonpositive_integer(c)) throw DomainError("hyp2f1: c must not be zero or a negative integer");
  if (z >= 1.0) throw DomainError("hyp2f1: only z < 1 is supported");
  if (a == 0.0 || b == 0.0 || z == 0.0) return 1.0;

  if (z >= -0.5) return gauss_series(a, b, c, z);

  // Pfaff: w = z / (z - 1) lies in (1/3, 1). The series in w has tail terms
  // ~ k^(a' + b' - c - 1); pick the form with the smaller exponent.
  const double w = z / (z - 1.0);
  if (a > b) return std::pow(1.0 - z, -b) * gauss_series(c - a, b, c, w);
  return std::pow(1.0 - z, -a) * gauss_series(a, c - b, c, w);
}

double hyp2f1(const Hyp2F1Args& args) { return hyp2f1(args.a, args.b, args.c, args.z); }

double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma: argument must be positive");
  int sign = 0;
  return ::lgamma_r(x, &sign);
}

double cell_load_pmf(double mean_load, std::int64_t m, double shape_b) {
  if (!(mean_load >= 0.0) || !std::isfinite(mean_load))
    throw DomainError("cell_load_pmf: mean load must be finite and >= 0");
  if (!(shape_b > 0.0)) throw DomainError("cell_load_pmf: shape must be positive");
  if (m < 0) return 0.0;
  if (mean_load == 0.0) return m == 0 ? 1.0 : 0.0;
  const double md = static_cast<double>(m);
  const double log_p = shape_b * std::log(shape_b) + log_gamma(md + shape_b) - log_gamma(shape_b) -
                       log_gamma(md + 1.0) + md * std::log(mean_load) -
                       (md + shape_b) * std::log(shape_b + mean_load);
  return std::exp(log_p);
}

std::int64_t cell_load_truncation(double mean_load, double shape_b) {
  const double spread = std::sqrt(mean_load * (1.0 + mean_load / shape_b));
  return static_cast<std::int64_t>(std::floor(mean_load + 40.0 * spread + 50.0));
}

CellLoadPmf::CellLoadPmf(double mean_load, double shape_b)
    : mean_load_(mean_load), shape_b_(shape_b), m_max_(cell_load_truncation(mean_load, shape_b)), mass_(0.0) {
  if (!(mean_load >= 0.0) || !std::isfinite(mean_load))
    throw DomainError("CellLoadPmf: mean load must be finite and >= 0");
  for (std::int64_t m = 0; m <= m_max_; ++m) mass_ += (*this)(m);
  if (mass_ < 1.0 - 1e-9) {
    std::ostringstream msg;
    msg << "cell load PMF retains only " << mass_ << " of its mass at mean load " << mean_load;
    throw NumericError(msg.str());
  }
}

double CellLoadPmf::operator()(std::int64_t m) const { return cell_load_pmf(mean_load_, m, shape_b_); }

double scma_interference_product(int n_c, double alpha) {
  if (!(alpha > 2.0)) throw DomainError("scma_interference_product: alpha must exceed 2");
  double product = 1.0;
  for (int n = 2; n <= n_c; ++n) product *= 2.0 / ((n - 1) * alpha) + 1.0;
  return product;
}

}  // namespace scmad2d
