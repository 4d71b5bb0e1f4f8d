#pragma once

#include <cstdint>

namespace scmad2d {

/// Shape constant of the Gamma-fitted Voronoi cell area used by the cell load law.
inline constexpr double kCellShape = 3.575;

struct Hyp2F1Args {
  double a = 0.0;
  double b = 0.0;
  double c = 1.0;
  double z = 0.0;
};

/// Gauss hypergeometric function 2F1(a, b; c; z) for real z < 1.
///
/// Uses the Gauss series on [-0.5, 1) and the Pfaff transformation
/// z -> z / (z - 1) below -0.5, choosing whichever of the two Pfaff forms
/// has the faster-decaying tail. Absolute accuracy is better than 1e-12 on
/// the ranges used by the coverage formulas.
///
/// Throws DomainError when c is zero or a negative integer, or z >= 1, and
/// NumericError when the series does not settle inside the iteration budget.
double hyp2f1(const Hyp2F1Args& args);
double hyp2f1(double a, double b, double c, double z);

/// Thread-safe log-Gamma for positive arguments.
double log_gamma(double x);

/// P{N_U = m}: negative-binomial law of the number of users in a cell with
/// mean load `mean_load`, evaluated in log-space.
double cell_load_pmf(double mean_load, std::int64_t m, double shape_b = kCellShape);

/// Truncation point mean + 40 sqrt(mean (1 + mean / b)) + 50.
std::int64_t cell_load_truncation(double mean_load, double shape_b = kCellShape);

class CellLoadPmf {
 public:
  /// Builds the truncated law; throws NumericError if the retained mass is
  /// below 1 - 1e-9.
  explicit CellLoadPmf(double mean_load, double shape_b = kCellShape);

  double mean_load() const noexcept { return mean_load_; }
  double shape_b() const noexcept { return shape_b_; }
  std::int64_t truncation_m_max() const noexcept { return m_max_; }

  double operator()(std::int64_t m) const;
  /// Mass retained on [0, m_max].
  double mass() const noexcept { return mass_; }

 private:
  double mean_load_;
  double shape_b_;
  std::int64_t m_max_;
  double mass_;
};

/// prod_{n=2}^{n_c} (2 / ((n - 1) alpha) + 1); 1 for n_c <= 1.
double scma_interference_product(int n_c, double alpha);

}  // namespace scmad2d
