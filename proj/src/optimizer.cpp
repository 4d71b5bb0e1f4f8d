#include "scmad2d/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "scmad2d/error.hpp"
#include "scmad2d/specialfn.hpp"

namespace scmad2d {

namespace {

constexpr double kPi = std::numbers::pi;

double log_or_sentinel(double ase_c, double ase_d) {
  if (!(ase_c > 0.0) || !(ase_d > 0.0)) return kNoUtility;
  return std::log(ase_c) + std::log(ase_d);
}

// 2 pi / (J alpha sin(2 pi / alpha)) prod(...), the per-codebook interference scale.
double codebook_scale(const NetworkConfig& cfg, double resources) {
  return 2.0 * kPi / (resources * cfg.alpha * std::sin(2.0 * kPi / cfg.alpha)) *
         scma_interference_product(cfg.n_c, cfg.alpha);
}

void require_underlaid_scma(const NetworkConfig& cfg, const char* who) {
  if (cfg.access_scheme != AccessScheme::scma || cfg.coexistence != Coexistence::underlaid)
    throw ValidationError(std::string(who) + " needs an underlaid SCMA configuration");
}

}  // namespace

UtilityPoint utility_underlaid(const NetworkConfig& cfg, const DerivedIntensities& d, double q_d) {
  require_underlaid_scma(cfg, "utility_underlaid");
  UtilityPoint p;
  p.decision = q_d;
  const CoveragePair cps = cp_with_activation(cfg, d, q_d);
  p.ase_c = d.q_u * d.lambda_ut * cps.cp_bs * std::log1p(cfg.tau_bs);
  p.ase_d = q_d * d.lambda_dt * cps.cp_dr * std::log1p(cfg.tau_dr);
  p.u = log_or_sentinel(p.ase_c, p.ase_d);
  return p;
}

ActivationOptimum optimal_qd_sparse(const NetworkConfig& cfg, const DerivedIntensities& d) {
  require_underlaid_scma(cfg, "optimal_qd_sparse");
  ActivationOptimum out;
  out.q_d = 1.0;
  out.regime_measure = std::isinf(cfg.tau_dis) ? kInfinity : d2d_rho(cfg, d, 1.0) * cfg.tau_dis * cfg.tau_dis;
  if (!(out.regime_measure <= kSparseRegimeThreshold)) {
    std::ostringstream msg;
    msg << "sparse-regime assumption violated: rho_S tau_dis^2 = " << out.regime_measure << " > "
        << kSparseRegimeThreshold;
    out.warnings.push_back(msg.str());
  }
  return out;
}

ActivationOptimum optimal_qd_full_d2d(const NetworkConfig& cfg, const DerivedIntensities& d) {
  require_underlaid_scma(cfg, "optimal_qd_full_d2d");
  if (!std::isinf(cfg.tau_dis)) throw ValidationError("optimal_qd_full_d2d requires tau_dis = inf");
  const double scale = codebook_scale(cfg, cfg.j_codebooks);
  const double tau_bs = std::pow(cfg.tau_bs / cfg.n_c * d.eta_p, d.delta);
  const double tau_dr = std::pow(cfg.tau_dr / cfg.n_c, d.delta);

  ActivationOptimum out;
  out.q1 = cfg.lambda_bs + d.q_u * d.lambda_ut / cfg.j_codebooks * hyf2(cfg.alpha, cfg.n_c, cfg.tau_bs);
  out.q2 = scale * d.lambda_dt * tau_bs;
  out.q3 = scale * tau_dr * d.lambda_dt;
  out.q4 = cfg.xi + scale * tau_dr * d.q_u * d.lambda_ut * std::pow(d.eta_p, -d.delta);
  const double lhs = out.q1 * out.q4;
  const double rhs = out.q2 * out.q3;
  out.q_d = lhs < rhs ? std::sqrt(lhs / rhs) : 1.0;
  return out;
}

UtilityPoint grid_search_qd(const NetworkConfig& cfg, const DerivedIntensities& d, double step) {
  if (!(step > 0.0 && step <= 1.0)) throw ValidationError("grid_search_qd: step must lie in (0, 1]");
  const auto points = static_cast<long>(std::llround(1.0 / step));
  UtilityPoint best;
  best.decision = 0.0;
  for (long i = 1; i <= points; ++i) {
    const double q = std::min(1.0, static_cast<double>(i) * step);
    const UtilityPoint p = utility_underlaid(cfg, d, q);
    if (p.u > best.u) best = p;
  }
  return best;
}

UtilityPoint utility_overlaid(const NetworkConfig& cfg, int j_c, bool dense) {
  if (j_c < 0 || j_c > cfg.j_codebooks) {
    std::ostringstream msg;
    msg << "utility_overlaid: j_c = " << j_c << " outside [0, " << cfg.j_codebooks << "]";
    throw ValidationError(msg.str());
  }
  UtilityPoint p;
  p.decision = j_c;
  if (j_c == 0 || j_c == cfg.j_codebooks) return p;

  NetworkConfig split = cfg;
  split.access_scheme = AccessScheme::scma;
  split.coexistence = Coexistence::overlaid;
  split.j_cell = j_c;
  const DerivedIntensities d = derive_intensities(split);
  const CoverageReport r = ase_report(split, d, cp_overlaid(split, d));
  p.ase_c = dense ? ase_cellular_dense_overlaid(split) : r.ase_cellular;
  p.ase_d = r.ase_d2d;
  p.u = log_or_sentinel(p.ase_c, p.ase_d);
  return p;
}

CodebookOptimum optimal_jc_dense(const NetworkConfig& cfg) {
  if (!std::isinf(cfg.tau_dis)) throw ValidationError("optimal_jc_dense requires tau_dis = inf");
  NetworkConfig split = cfg;
  split.access_scheme = AccessScheme::scma;
  split.coexistence = Coexistence::overlaid;
  split.validate();
  const DerivedIntensities d = derive_intensities(split);

  CodebookOptimum out;
  const double j = cfg.j_codebooks;
  out.q6 = codebook_scale(cfg, 1.0) * std::pow(cfg.tau_dr / cfg.n_c, d.delta) * cfg.q_d * d.lambda_dt / cfg.xi;
  out.unclamped = j + out.q6 - std::sqrt(out.q6 * out.q6 + j * out.q6);
  const auto rounded = static_cast<long>(std::llround(out.unclamped));
  out.j_c = static_cast<int>(std::clamp<long>(rounded, 1, cfg.j_codebooks - 1));
  if (out.j_c != rounded) {
    std::ostringstream msg;
    msg << "codebook optimum " << rounded << " clamped to " << out.j_c;
    out.warnings.push_back(msg.str());
  }
  if (d.lambda_ut < kDenseCellularFactor * j * cfg.lambda_bs) {
    std::ostringstream msg;
    msg << "dense-cellular assumption violated: lambda_UT = " << d.lambda_ut << " < " << kDenseCellularFactor
        << " J lambda_BS = " << kDenseCellularFactor * j * cfg.lambda_bs;
    out.warnings.push_back(msg.str());
  }
  return out;
}

UtilityPoint exhaustive_search_jc(const NetworkConfig& cfg, bool dense) {
  UtilityPoint best;
  best.decision = 1;
  for (int j_c = 1; j_c < cfg.j_codebooks; ++j_c) {
    const UtilityPoint p = utility_overlaid(cfg, j_c, dense);
    if (p.u > best.u) best = p;
  }
  return best;
}

}  // namespace scmad2d
