#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "oracles/quadrature.hpp"
#include "oracles/random_config.hpp"
#include "scmad2d/analytics.hpp"
#include "scmad2d/error.hpp"

using namespace scmad2d;

namespace {

oracle::Model model_for(const NetworkConfig& c, double tau) {
  oracle::Model m;
  m.alpha = c.alpha;
  m.fade_shape = c.access_scheme == AccessScheme::scma ? c.n_c : 1.0;
  m.tau = tau;
  m.p_u = c.p_u;
  m.p_d = c.p_d;
  return m;
}

oracle::Field underlaid_field(const NetworkConfig& c, const DerivedIntensities& d, double q_d) {
  const double n = c.access_scheme == AccessScheme::scma ? c.j_codebooks : c.k_tones;
  return {d.q_u * d.lambda_ut / n, q_d * d.lambda_dt / n};
}

}  // namespace

TEST_CASE("OFDMA coverage equals the Laplace-transform integrals") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 10; ++i) {
    const NetworkConfig c = oracle::random_config(rng, AccessScheme::ofdma);
    const DerivedIntensities d = derive_intensities(c);
    const oracle::Field f = underlaid_field(c, d, c.q_d);
    CAPTURE(i);
    CHECK(std::abs(cp_bs_ofdma_underlaid(c, d) - oracle::cp_bs(model_for(c, c.tau_bs), f, c.lambda_bs)) <= 1e-7);
    CHECK(std::abs(cp_dr_ofdma_underlaid(c, d) - oracle::cp_dr(model_for(c, c.tau_dr), f, c.xi, c.tau_dis)) <= 1e-7);
  }
}

TEST_CASE("SCMA coverage equals the Laplace integrals with an exponential signal of mean N_C") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 10; ++i) {
    const NetworkConfig c = oracle::random_config(rng, AccessScheme::scma);
    const DerivedIntensities d = derive_intensities(c);
    const CoveragePair cp = cp_with_activation(c, d, c.q_d);
    const oracle::Field f = underlaid_field(c, d, c.q_d);
    CAPTURE(i);
    CHECK(std::abs(cp.cp_bs - oracle::cp_bs(model_for(c, c.tau_bs), f, c.lambda_bs)) <= 1e-7);
    CHECK(std::abs(cp.cp_dr - oracle::cp_dr(model_for(c, c.tau_dr), f, c.xi, c.tau_dis)) <= 1e-7);
  }
}

TEST_CASE("overlaid coverage equals the Laplace integrals over disjoint pools") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 8; ++i) {
    NetworkConfig c = oracle::random_config(rng, AccessScheme::scma);
    c.coexistence = Coexistence::overlaid;
    const DerivedIntensities d = derive_intensities(c);
    const CoveragePair cp = cp_overlaid(c, d);
    const oracle::Field bs{d.q_u * d.lambda_ut / c.j_cell, 0.0};
    const oracle::Field dr{0.0, c.q_d * d.lambda_dt / (c.j_codebooks - c.j_cell)};
    CAPTURE(i);
    CHECK(std::abs(cp.cp_bs - oracle::cp_bs(model_for(c, c.tau_bs), bs, c.lambda_bs)) <= 1e-7);
    CHECK(std::abs(cp.cp_dr - oracle::cp_dr(model_for(c, c.tau_dr), dr, c.xi, c.tau_dis)) <= 1e-7);
  }
}

TEST_CASE("coverage limits") {
  NetworkConfig c;
  c.lambda_u = 0.0;
  c.lambda_d = 0.0;
  DerivedIntensities d = derive_intensities(c);
  CHECK(cp_bs_scma_underlaid(c, d) == doctest::Approx(1.0));
  CHECK(cp_dr_scma_underlaid(c, d) == doctest::Approx(1.0));
  c = {};
  c.tau_dis = 0.0;
  d = derive_intensities(c);
  CHECK(cp_dr_scma_underlaid(c, d) == 0.0);
  c.access_scheme = AccessScheme::ofdma;
  CHECK(cp_dr_ofdma_underlaid(c, derive_intensities(c)) == 0.0);
}

TEST_CASE("D2D coverage embeds the mode-selection probability") {
  NetworkConfig c;
  c.lambda_u = 0.0;
  c.lambda_d = 0.0;
  c.tau_dis = 120.0;
  const DerivedIntensities d = derive_intensities(c);
  CHECK(cp_dr_scma_underlaid(c, d) == doctest::Approx(d2d_link_length_cdf(120.0, c.xi)).epsilon(1e-12));
}

TEST_CASE("mode checks reject mismatched configurations") {
  NetworkConfig c;
  const DerivedIntensities d = derive_intensities(c);
  CHECK_THROWS_AS(cp_bs_ofdma_underlaid(c, d), ValidationError);
  CHECK_THROWS_AS(cp_overlaid(c, d), ValidationError);
  CHECK_THROWS_AS(cp_with_activation(c, d, 1.5), ValidationError);
}

TEST_CASE("ASE follows the per-tier definition") {
  NetworkConfig c;
  c.q_d = 0.7;
  const DerivedIntensities d = derive_intensities(c);
  const CoverageReport r = evaluate_analytic(c);
  const CoveragePair cp = cp_with_activation(c, d, 0.7);
  CHECK(r.cp_cellular == doctest::Approx(cp.cp_bs));
  CHECK(r.ase_cellular == doctest::Approx(d.q_u * d.lambda_ut * cp.cp_bs * std::log(11.0)));
  CHECK(r.ase_d2d == doctest::Approx(0.7 * d.lambda_dt * cp.cp_dr * std::log(11.0)));
  CHECK(r.ase_total == doctest::Approx(r.ase_cellular + r.ase_d2d));
  CHECK(r.provenance == Provenance::analytic);
  CHECK(r.ci_halfwidth == 0.0);
}

TEST_CASE("ASE gain of SCMA over OFDMA") {
  NetworkConfig c;
  const AseGain g = ase_gain(c);
  NetworkConfig o = c;
  o.access_scheme = AccessScheme::ofdma;
  CHECK(g.eta_ase == doctest::Approx(evaluate_analytic(c).ase_total / evaluate_analytic(o).ase_total));
  REQUIRE(g.eta_hat.has_value());
  CHECK(*g.eta_hat == doctest::Approx(g.eta_ase));
  c.tau_dr = 5.0;
  CHECK_FALSE(ase_gain(c).eta_hat.has_value());
  CoverageReport zero;
  CHECK_THROWS_AS(ase_gain(evaluate_analytic(NetworkConfig{}), zero, NetworkConfig{}), NumericError);
}

TEST_CASE("SCMA outperforms OFDMA under heavy cellular load") {
  NetworkConfig c;
  c.lambda_u = 1e-2;
  CHECK(ase_gain(c).eta_ase > 1.0);
}

TEST_CASE("coverage is monotone in interferer densities, J and K") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 60; ++i) {
    for (AccessScheme s : {AccessScheme::ofdma, AccessScheme::scma}) {
      const NetworkConfig c = oracle::random_config(rng, s);
      const CoverageReport base = evaluate_analytic(c);
      NetworkConfig more_u = c;
      more_u.lambda_u *= 1.5;
      NetworkConfig more_d = c;
      more_d.lambda_d *= 1.5;
      NetworkConfig more_res = c;
      if (s == AccessScheme::scma) more_res.j_codebooks += 5;
      else more_res.k_tones += 5;
      CAPTURE(i);
      const CoverageReport ru = evaluate_analytic(more_u);
      const CoverageReport rd = evaluate_analytic(more_d);
      const CoverageReport rr = evaluate_analytic(more_res);
      CHECK(ru.cp_cellular <= base.cp_cellular + 1e-12);
      CHECK(ru.cp_d2d <= base.cp_d2d + 1e-12);
      CHECK(rd.cp_cellular <= base.cp_cellular + 1e-12);
      CHECK(rr.cp_cellular >= base.cp_cellular - 1e-12);
      CHECK(rr.cp_d2d >= base.cp_d2d - 1e-12);
    }
  }
}

TEST_CASE("activation probability trades cellular against D2D ASE") {
  NetworkConfig c;
  c.lambda_u = 1e-3;
  c.lambda_d = 2.5e-3;
  double prev_c = INFINITY, prev_d = 0.0;
  for (double q = 0.1; q <= 1.0 + 1e-9; q += 0.1) {
    c.q_d = std::min(q, 1.0);
    const CoverageReport r = evaluate_analytic(c);
    CHECK(r.ase_cellular < prev_c);
    CHECK(r.ase_d2d > prev_d);
    prev_c = r.ase_cellular;
    prev_d = r.ase_d2d;
  }
}

TEST_CASE("overlaid codebook split: each tier gains from its own codebooks") {
  NetworkConfig c;
  c.lambda_u = 1e-3;
  c.lambda_d = 2.5e-3;
  c.coexistence = Coexistence::overlaid;
  double prev_c = 0.0, prev_d = INFINITY;
  for (int jc = 1; jc < c.j_codebooks; ++jc) {
    c.j_cell = jc;
    const CoverageReport r = evaluate_analytic(c);
    CHECK(r.ase_cellular > prev_c);
    CHECK(r.ase_d2d < prev_d);
    prev_c = r.ase_cellular;
    prev_d = r.ase_d2d;
  }
}

TEST_CASE("mode selection threshold: tier trends and the underlaid advantage") {
  NetworkConfig u;
  u.lambda_u = 5e-4;
  u.lambda_d = 2.5e-4;
  u.j_cell = 10;
  NetworkConfig o = u;
  o.coexistence = Coexistence::overlaid;
  std::vector<CoverageReport> ru, ro;
  for (double t = 0.0; t <= 500.0; t += 25.0) {
    u.tau_dis = o.tau_dis = t;
    ru.push_back(evaluate_analytic(u));
    ro.push_back(evaluate_analytic(o));
  }
  // Without D2D-mode links every codebook serves cellular users.
  CHECK(ru.front().ase_total > ro.front().ase_total);
  for (std::size_t i = 1; i < ru.size(); ++i) {
    CAPTURE(i);
    CHECK(ru[i].ase_d2d >= ru[i - 1].ase_d2d);
    CHECK(ro[i].ase_d2d >= ro[i - 1].ase_d2d);
    CHECK(ru[i].ase_cellular <= ru[i - 1].ase_cellular * (1 + 1e-12));
    CHECK(ro[i].ase_cellular <= ro[i - 1].ase_cellular * (1 + 1e-12));
  }
  // Cross-tier interference erodes underlaid cellular ASE faster.
  CHECK(ru.front().ase_cellular - ru.back().ase_cellular > ro.front().ase_cellular - ro.back().ase_cellular);
  CHECK(ru.back().ase_total - ro.back().ase_total < ru.front().ase_total - ro.front().ase_total);
}

TEST_CASE("saturated-cell cellular ASE") {
  NetworkConfig c;
  c.coexistence = Coexistence::overlaid;
  c.j_cell = 12;
  CHECK(ase_cellular_dense_overlaid(c) ==
        doctest::Approx(12 * c.lambda_bs * std::log(11.0) / (hyf2(4.0, 2, 10.0) + 1.0)));
  c.lambda_u = 1.0;
  const CoverageReport r = evaluate_analytic(c);
  CHECK(r.ase_cellular == doctest::Approx(ase_cellular_dense_overlaid(c)).epsilon(1e-3));
}
