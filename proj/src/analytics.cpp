#include "scmad2d/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "scmad2d/error.hpp"
#include "scmad2d/specialfn.hpp"

namespace scmad2d {

namespace {

constexpr double kPi = std::numbers::pi;

// alpha sin(2 pi / alpha)
double geometry_factor(double alpha) { return alpha * std::sin(2.0 * kPi / alpha); }

double d2d_coverage_from_rho(double xi, double rho, double tau_dis) {
  const double scale = kPi * xi / rho;
  if (std::isinf(tau_dis)) return scale;
  return scale * -std::expm1(-rho * tau_dis * tau_dis);
}

double clamp01(double p) { return std::clamp(p, 0.0, 1.0); }

void require_mode(const NetworkConfig& cfg, AccessScheme s, Coexistence c, const char* who) {
  if (cfg.access_scheme != s || cfg.coexistence != c)
    throw ValidationError(std::string(who) + ": configuration is " + to_string(cfg.access_scheme) + "/" +
                          to_string(cfg.coexistence));
}

}  // namespace

double hyf1(double alpha, double tau_bs) {
  const double delta = 2.0 / alpha;
  return hyp2f1(1.0, 1.0 - delta, 2.0 - delta, -tau_bs);
}

double hyf2(double alpha, int n_c, double tau_bs) {
  const double delta = 2.0 / alpha;
  return hyp2f1(static_cast<double>(n_c), -delta, 1.0 - delta, -tau_bs / n_c) - 1.0;
}

double cp_bs_ofdma_underlaid(const NetworkConfig& cfg, const DerivedIntensities& d) {
  require_mode(cfg, AccessScheme::ofdma, Coexistence::underlaid, "cp_bs_ofdma_underlaid");
  const double k = cfg.k_tones;
  const double cellular = 2.0 * d.q_u * d.lambda_ut * cfg.tau_bs / (k * (cfg.alpha - 2.0)) * hyf1(cfg.alpha, cfg.tau_bs);
  const double d2d = 2.0 * kPi * cfg.q_d * d.lambda_dt * std::pow(cfg.tau_bs * d.eta_p, d.delta) /
                     (k * geometry_factor(cfg.alpha));
  return clamp01(cfg.lambda_bs / (cfg.lambda_bs + cellular + d2d));
}

double cp_dr_ofdma_underlaid(const NetworkConfig& cfg, const DerivedIntensities& d) {
  require_mode(cfg, AccessScheme::ofdma, Coexistence::underlaid, "cp_dr_ofdma_underlaid");
  return clamp01(d2d_coverage_from_rho(cfg.xi, d2d_rho(cfg, d, cfg.q_d), cfg.tau_dis));
}

CoveragePair cp_with_activation(const NetworkConfig& cfg, const DerivedIntensities& d, double q_d) {
  require_mode(cfg, AccessScheme::scma, Coexistence::underlaid, "cp_with_activation");
  if (!(q_d >= 0.0 && q_d <= 1.0)) throw ValidationError("cp_with_activation: q_d must lie in [0, 1]");
  const double j = cfg.j_codebooks;
  const double tau_tilde = cfg.tau_bs / cfg.n_c;
  const double cellular = d.q_u * d.lambda_ut / j * hyf2(cfg.alpha, cfg.n_c, cfg.tau_bs);
  const double d2d = 2.0 * kPi * q_d * d.lambda_dt * std::pow(tau_tilde * d.eta_p, d.delta) /
                     (j * geometry_factor(cfg.alpha)) * scma_interference_product(cfg.n_c, cfg.alpha);
  CoveragePair out;
  out.cp_bs = clamp01(cfg.lambda_bs / (cfg.lambda_bs + cellular + d2d));
  out.cp_dr = clamp01(d2d_coverage_from_rho(cfg.xi, d2d_rho(cfg, d, q_d), cfg.tau_dis));
  return out;
}

double cp_bs_scma_underlaid(const NetworkConfig& cfg, const DerivedIntensities& d) {
  return cp_with_activation(cfg, d, 1.0).cp_bs;
}

double cp_dr_scma_underlaid(const NetworkConfig& cfg, const DerivedIntensities& d) {
  return cp_with_activation(cfg, d, 1.0).cp_dr;
}

CoveragePair cp_overlaid(const NetworkConfig& cfg, const DerivedIntensities& d) {
  require_mode(cfg, AccessScheme::scma, Coexistence::overlaid, "cp_overlaid");
  if (cfg.j_cell < 1 || cfg.j_cell >= cfg.j_codebooks)
    throw ValidationError("cp_overlaid: j_cell must lie in [1, J - 1]");
  const double cellular = d.q_u * d.lambda_ut / cfg.j_cell * hyf2(cfg.alpha, cfg.n_c, cfg.tau_bs);
  CoveragePair out;
  out.cp_bs = clamp01(cfg.lambda_bs / (cfg.lambda_bs + cellular));
  out.cp_dr = clamp01(d2d_coverage_from_rho(cfg.xi, d2d_rho(cfg, d, cfg.q_d), cfg.tau_dis));
  return out;
}

double d2d_rho(const NetworkConfig& cfg, const DerivedIntensities& d, double q_d) {
  const double g = geometry_factor(cfg.alpha);
  const double base = kPi * cfg.xi;
  const double pi2 = 2.0 * kPi * kPi;
  if (cfg.access_scheme == AccessScheme::ofdma) {
    const double load = q_d * d.lambda_dt + d.q_u * d.lambda_ut * std::pow(d.eta_p, -d.delta);
    return base + pi2 * std::pow(cfg.tau_dr, d.delta) * load / (cfg.k_tones * g);
  }
  const double tau_tilde = std::pow(cfg.tau_dr / cfg.n_c, d.delta);
  const double product = scma_interference_product(cfg.n_c, cfg.alpha);
  if (cfg.coexistence == Coexistence::overlaid) {
    const double j_d = cfg.j_codebooks - cfg.j_cell;
    return base + pi2 * tau_tilde * q_d * d.lambda_dt / (j_d * g) * product;
  }
  const double load = q_d * d.lambda_dt + d.q_u * d.lambda_ut * std::pow(d.eta_p, -d.delta);
  return base + pi2 * tau_tilde * load / (cfg.j_codebooks * g) * product;
}

CoveragePair coverage(const NetworkConfig& cfg, const DerivedIntensities& d) {
  if (cfg.access_scheme == AccessScheme::ofdma)
    return {cp_bs_ofdma_underlaid(cfg, d), cp_dr_ofdma_underlaid(cfg, d)};
  if (cfg.coexistence == Coexistence::overlaid) return cp_overlaid(cfg, d);
  return cp_with_activation(cfg, d, cfg.q_d);
}

CoverageReport ase_report(const NetworkConfig& cfg, const DerivedIntensities& d, const CoveragePair& cps) {
  CoverageReport r;
  r.cp_cellular = cps.cp_bs;
  r.cp_d2d = cps.cp_dr;
  r.ase_cellular = d.q_u * d.lambda_ut * cps.cp_bs * std::log1p(cfg.tau_bs);
  r.ase_d2d = cfg.q_d * d.lambda_dt * cps.cp_dr * std::log1p(cfg.tau_dr);
  r.ase_total = r.ase_cellular + r.ase_d2d;
  r.provenance = Provenance::analytic;
  return r;
}

CoverageReport evaluate_analytic(const NetworkConfig& cfg) {
  const DerivedIntensities d = derive_intensities(cfg);
  return ase_report(cfg, d, coverage(cfg, d));
}

AseGain ase_gain(const CoverageReport& scma, const CoverageReport& ofdma, const NetworkConfig& cfg) {
  if (!(ofdma.ase_total > 0.0)) throw NumericError("ase_gain: OFDMA system ASE is zero");
  AseGain g;
  g.eta_ase = scma.ase_total / ofdma.ase_total;
  if (cfg.tau_bs == cfg.tau_dr) {
    const double nats = std::log1p(cfg.tau_bs);
    g.eta_hat = (scma.ase_total / nats) / (ofdma.ase_total / nats);
  }
  return g;
}

AseGain ase_gain(const NetworkConfig& cfg) {
  NetworkConfig scma = cfg;
  scma.access_scheme = AccessScheme::scma;
  scma.coexistence = Coexistence::underlaid;
  NetworkConfig ofdma = scma;
  ofdma.access_scheme = AccessScheme::ofdma;
  return ase_gain(evaluate_analytic(scma), evaluate_analytic(ofdma), cfg);
}

double ase_cellular_dense_overlaid(const NetworkConfig& cfg) {
  return cfg.j_cell * cfg.lambda_bs * std::log1p(cfg.tau_bs) / (hyf2(cfg.alpha, cfg.n_c, cfg.tau_bs) + 1.0);
}

}  // namespace scmad2d
