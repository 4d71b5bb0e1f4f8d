#pragma once

#include <optional>

#include "scmad2d/topology.hpp"

namespace scmad2d {

enum class Provenance { analytic, monte_carlo };

struct CoveragePair {
  double cp_bs = 0.0;  // typical uplink, at the serving BS
  double cp_dr = 0.0;  // typical D2D receiver; embeds P(r <= tau_dis)
};

/// Coverage probability and area spectral efficiency per tier. ASE uses the
/// natural logarithm, so it is in nats/(s Hz m^2).
struct CoverageReport {
  double cp_cellular = 0.0;
  double cp_d2d = 0.0;
  double ase_cellular = 0.0;
  double ase_d2d = 0.0;
  double ase_total = 0.0;
  Provenance provenance = Provenance::analytic;
  double ci_halfwidth = 0.0;  // max over the two tiers
  double ci_cellular = 0.0;
  double ci_d2d = 0.0;
};

// Underlaid OFDMA, exact under independent per-tone thinning. D2D
// interference is thinned by cfg.q_d.
double cp_bs_ofdma_underlaid(const NetworkConfig& cfg, const DerivedIntensities& d);
double cp_dr_ofdma_underlaid(const NetworkConfig& cfg, const DerivedIntensities& d);

// Underlaid SCMA with all D2D pairs active (the Gamma signal fade replaced by
// an exponential of equal mean).
double cp_bs_scma_underlaid(const NetworkConfig& cfg, const DerivedIntensities& d);
double cp_dr_scma_underlaid(const NetworkConfig& cfg, const DerivedIntensities& d);

/// Underlaid SCMA where each D2D transmitter is active with probability q_d.
CoveragePair cp_with_activation(const NetworkConfig& cfg, const DerivedIntensities& d, double q_d);

/// Overlaid SCMA: J_C codebooks for cellular users, J - J_C for D2D pairs.
/// `d.q_u` must be the access probability with J_C resources.
CoveragePair cp_overlaid(const NetworkConfig& cfg, const DerivedIntensities& d);

/// Exponent rho of the D2D coverage term pi xi / rho (1 - exp(-rho tau_dis^2))
/// for cfg's scheme and coexistence mode, at activation probability q_d.
double d2d_rho(const NetworkConfig& cfg, const DerivedIntensities& d, double q_d);

/// Coverage pair for cfg's scheme and coexistence mode at cfg.q_d.
CoveragePair coverage(const NetworkConfig& cfg, const DerivedIntensities& d);

/// A_C = q_U lambda_UT CP_BS ln(1 + tau_BS); A_D = q_D lambda_DT CP_DR ln(1 + tau_DR).
CoverageReport ase_report(const NetworkConfig& cfg, const DerivedIntensities& d, const CoveragePair& cps);

/// Closed-form report for cfg (derives intensities itself).
CoverageReport evaluate_analytic(const NetworkConfig& cfg);

struct AseGain {
  double eta_ase = 1.0;
  /// Ratio of successfully admitted intensities; present only when tau_BS == tau_DR.
  std::optional<double> eta_hat;
};

/// System ASE of SCMA over OFDMA at identical geometry. Throws NumericError
/// if the OFDMA system ASE is zero.
AseGain ase_gain(const CoverageReport& scma, const CoverageReport& ofdma, const NetworkConfig& cfg);

/// Evaluates cfg under underlaid SCMA and underlaid OFDMA and returns the gain.
AseGain ase_gain(const NetworkConfig& cfg);

/// Cellular ASE of overlaid SCMA when every cell is saturated: the active
/// cellular density is J_C lambda_BS.
double ase_cellular_dense_overlaid(const NetworkConfig& cfg);

/// 2F1(1, 1 - delta, 2 - delta, -tau) and 2F1(N_C, -delta, 1 - delta, -tau / N_C) - 1.
double hyf1(double alpha, double tau_bs);
double hyf2(double alpha, int n_c, double tau_bs);

}  // namespace scmad2d
