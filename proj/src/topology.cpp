#include "scmad2d/topology.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "scmad2d/error.hpp"
#include "scmad2d/specialfn.hpp"

namespace scmad2d {

namespace {

void require(bool ok, const char* invariant) {
  if (!ok) throw ValidationError(std::string("invalid configuration: ") + invariant);
}

bool finite_nonneg(double x) { return std::isfinite(x) && x >= 0.0; }

}  // namespace

void NetworkConfig::validate() const {
  require(finite_nonneg(lambda_bs) && finite_nonneg(lambda_u) && finite_nonneg(lambda_d),
          "densities must be finite and >= 0");
  require(lambda_bs > 0.0, "lambda_bs must be > 0");
  require(std::isfinite(p_u) && p_u > 0.0 && std::isfinite(p_d) && p_d > 0.0, "transmit powers must be > 0");
  require(std::isfinite(alpha) && alpha > 2.0, "alpha must be > 2");
  require(std::isfinite(xi) && xi > 0.0, "xi must be > 0");
  require(tau_dis >= 0.0, "tau_dis must be >= 0");
  require(std::isfinite(tau_bs) && tau_bs > 0.0 && std::isfinite(tau_dr) && tau_dr > 0.0,
          "SIR thresholds must be > 0");
  require(k_tones >= 1, "k_tones must be >= 1");
  require(n_c >= 2 && n_c < k_tones, "2 <= n_c < k_tones");
  require(j_codebooks >= 1, "j_codebooks must be >= 1");
  if (coexistence == Coexistence::overlaid)
    require(j_cell >= 1 && j_cell < j_codebooks, "overlaid mode needs 1 <= j_cell < j_codebooks");
  require(q_d >= 0.0 && q_d <= 1.0, "q_d must lie in [0, 1]");
  require(!(access_scheme == AccessScheme::ofdma && coexistence == Coexistence::overlaid),
          "OFDMA is modelled in underlaid mode only");
}

int NetworkConfig::cellular_resources() const {
  if (access_scheme == AccessScheme::ofdma) return k_tones;
  return coexistence == Coexistence::overlaid ? j_cell : j_codebooks;
}

int NetworkConfig::d2d_resources() const {
  if (access_scheme == AccessScheme::ofdma) return k_tones;
  return coexistence == Coexistence::overlaid ? j_codebooks - j_cell : j_codebooks;
}

double mode_selection_probability(double xi, double tau_dis) {
  if (std::isinf(tau_dis)) return 1.0;
  return -std::expm1(-xi * std::numbers::pi * tau_dis * tau_dis);
}

DerivedIntensities derive_intensities(const NetworkConfig& cfg) {
  cfg.validate();
  DerivedIntensities d;
  const double p_d2d = mode_selection_probability(cfg.xi, cfg.tau_dis);
  d.lambda_dt = cfg.lambda_d * p_d2d;
  d.lambda_ut = cfg.lambda_u + cfg.lambda_d * (1.0 - p_d2d);
  d.eta_p = cfg.p_d / cfg.p_u;
  d.delta = 2.0 / cfg.alpha;
  d.q_u = access_probability(d.lambda_ut / cfg.lambda_bs, cfg.cellular_resources(), cfg.access_rule);
  return d;
}

double access_probability(double mean_load, int n_resources, AccessRule rule) {
  if (!(mean_load >= 0.0) || !std::isfinite(mean_load))
    throw ValidationError("access_probability: mean load must be finite and >= 0");
  if (n_resources < 1) throw ValidationError("access_probability: need at least one resource");
  if (mean_load == 0.0) return 1.0;

  const CellLoadPmf pmf(mean_load);
  const std::int64_t r = n_resources;
  double blocked = 0.0;
  for (std::int64_t m = r + 1; m <= pmf.truncation_m_max(); ++m) {
    const double md = static_cast<double>(m);
    if (rule == AccessRule::active_fraction)
      blocked += (md - static_cast<double>(r)) * pmf(m);
    else
      blocked += (md - 1.0) / md * pmf(m);
  }
  if (rule == AccessRule::active_fraction) blocked /= mean_load;
  return std::clamp(1.0 - blocked, 0.0, 1.0);
}

double d2d_link_length_pdf(double x, double xi) {
  if (x < 0.0) return 0.0;
  return 2.0 * std::numbers::pi * xi * x * std::exp(-xi * std::numbers::pi * x * x);
}

double d2d_link_length_cdf(double x, double xi) {
  if (x <= 0.0) return 0.0;
  return mode_selection_probability(xi, x);
}

double overloading_factor(int j, int k) {
  if (j < 1 || k < 1) throw ValidationError("overloading_factor: j and k must be >= 1");
  return static_cast<double>(j) / static_cast<double>(k);
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

std::string to_string(Coexistence c) { return c == Coexistence::underlaid ? "underlaid" : "overlaid"; }
std::string to_string(AccessScheme s) { return s == AccessScheme::ofdma ? "ofdma" : "scma"; }
std::string to_string(AccessRule r) { return r == AccessRule::active_fraction ? "active_fraction" : "literal"; }

}  // namespace scmad2d
