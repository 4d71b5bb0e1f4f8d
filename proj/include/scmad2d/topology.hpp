#pragma once

#include <limits>
#include <string>

namespace scmad2d {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class Coexistence { underlaid, overlaid };
enum class AccessScheme { ofdma, scma };

/// How the cellular access probability is obtained from the cell load law.
///   active_fraction: q = E[min(N_U, N_R)] / E[N_U], the fraction of users
///                    that hold a resource (matches the simulated density).
///   literal:         q = 1 - sum_{m > N_R} (m - 1)/m P{N_U = m}, the single
///                    resource form evaluated with N_R resources.
enum class AccessRule { active_fraction, literal };

/// All scalar model parameters. Densities are per m^2, powers in mW,
/// thresholds linear, distances in m.
struct NetworkConfig {
  double lambda_bs = 5e-5;
  double lambda_u = 1e-3;
  double lambda_d = 2.5e-4;
  double p_u = 100.0;  // 20 dBm
  double p_d = 100.0;
  double alpha = 4.0;
  double xi = 5e-5;
  double tau_dis = kInfinity;
  double tau_bs = 10.0;  // 10 dB
  double tau_dr = 10.0;
  int k_tones = 20;
  int n_c = 2;
  int j_codebooks = 30;
  int j_cell = 10;
  double q_d = 1.0;
  Coexistence coexistence = Coexistence::underlaid;
  AccessScheme access_scheme = AccessScheme::scma;
  AccessRule access_rule = AccessRule::active_fraction;

  /// Throws ValidationError naming the first violated invariant.
  void validate() const;

  /// Number of orthogonal resources a BS hands out to its cellular users:
  /// K (OFDMA), J (underlaid SCMA) or J_C (overlaid SCMA).
  int cellular_resources() const;
  /// Resource pool D2D pairs draw from: K, J or J - J_C.
  int d2d_resources() const;
};

struct DerivedIntensities {
  double lambda_ut = 0.0;  // uplink users plus cellular-mode D2D transmitters
  double lambda_dt = 0.0;  // D2D-mode transmitters
  double eta_p = 1.0;      // P_D / P_U
  double delta = 0.5;      // 2 / alpha
  double q_u = 1.0;        // cellular access probability for cfg's resource pool
};

/// P(r <= tau) for the Rayleigh link length; 1 for tau = +inf.
double mode_selection_probability(double xi, double tau_dis);

DerivedIntensities derive_intensities(const NetworkConfig& cfg);

/// Cellular access probability with `n_resources` resources per BS.
/// Throws NumericError if the truncated cell load law loses mass.
double access_probability(double mean_load, int n_resources, AccessRule rule = AccessRule::active_fraction);

double d2d_link_length_pdf(double x, double xi);
double d2d_link_length_cdf(double x, double xi);

double overloading_factor(int j, int k);

/// Binomial coefficient C(n, k), used for the J = C(K, N_C) codebook count.
long long binomial(int n, int k);

std::string to_string(Coexistence c);
std::string to_string(AccessScheme s);
std::string to_string(AccessRule r);

}  // namespace scmad2d
