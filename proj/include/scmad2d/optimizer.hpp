#pragma once

#include <limits>
#include <string>
#include <vector>

#include "scmad2d/analytics.hpp"
#include "scmad2d/topology.hpp"

namespace scmad2d {

/// Sentinel for utilities whose ASE vanishes.
inline constexpr double kNoUtility = -std::numeric_limits<double>::infinity();

/// rho_S(q_D = 1) tau_dis^2 below this counts as the sparse regime.
inline constexpr double kSparseRegimeThreshold = 0.05;
/// lambda_UT >= this factor times J lambda_BS counts as dense cellular deployment.
inline constexpr double kDenseCellularFactor = 10.0;

/// One point of a proportional-fairness utility curve, in nats.
struct UtilityPoint {
  double decision = 0.0;  // q_D or J_C
  double u = kNoUtility;  // ln(ase_c) + ln(ase_d), kNoUtility if either is 0
  double ase_c = 0.0;
  double ase_d = 0.0;
};

/// Utility of underlaid SCMA with D2D activation probability q_d.
UtilityPoint utility_underlaid(const NetworkConfig& cfg, const DerivedIntensities& d, double q_d);

struct ActivationOptimum {
  double q_d = 1.0;
  double q1 = 0.0, q2 = 0.0, q3 = 0.0, q4 = 0.0;
  double regime_measure = 0.0;  // rho_S(1) tau_dis^2 for the sparse case
  std::vector<std::string> warnings;
};

/// Sparse regime optimum (always 1). Warns when rho_S tau_dis^2 exceeds
/// kSparseRegimeThreshold.
ActivationOptimum optimal_qd_sparse(const NetworkConfig& cfg, const DerivedIntensities& d);

/// Closed-form optimum with every D2D pair in D2D mode. Throws
/// ValidationError if tau_dis is finite.
ActivationOptimum optimal_qd_full_d2d(const NetworkConfig& cfg, const DerivedIntensities& d);

/// Grid-search argmax of utility_underlaid over q_d = step, 2 step, ..., 1.
/// Ties go to the smallest q_d.
UtilityPoint grid_search_qd(const NetworkConfig& cfg, const DerivedIntensities& d, double step = 1e-3);

/// Utility of overlaid SCMA with j_c cellular codebooks. `dense` swaps in
/// the saturated-cell cellular ASE J_C lambda_BS ln(1 + tau_BS) / (HyF2 + 1).
/// j_c outside [1, J - 1] yields kNoUtility; throws ValidationError for
/// j_c < 0 or j_c > J.
UtilityPoint utility_overlaid(const NetworkConfig& cfg, int j_c, bool dense);

struct CodebookOptimum {
  int j_c = 1;
  double unclamped = 0.0;  // J + Q6 - sqrt(Q6^2 + J Q6)
  double q6 = 0.0;
  std::vector<std::string> warnings;
};

/// Dense-cellular optimum round(J + Q6 - sqrt(Q6^2 + J Q6)) clamped to [1, J - 1].
/// Throws ValidationError if tau_dis is finite.
CodebookOptimum optimal_jc_dense(const NetworkConfig& cfg);

/// Exhaustive integer argmax of utility_overlaid over J_C in [1, J - 1].
UtilityPoint exhaustive_search_jc(const NetworkConfig& cfg, bool dense);

}  // namespace scmad2d
