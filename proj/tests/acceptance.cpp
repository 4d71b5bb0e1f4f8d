// Acceptance checks. Usage: acceptance [N ...]; runs every criterion when no
// number is given. Prints one PASS/FAIL line per criterion and exits non-zero
// if any selected criterion fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles/quadrature.hpp"
#include "oracles/random_config.hpp"
#include "scmad2d/analytics.hpp"
#include "scmad2d/optimizer.hpp"
#include "scmad2d/simulator.hpp"
#include "scmad2d/specialfn.hpp"
#include "scmad2d/topology.hpp"

using namespace scmad2d;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  double limit_s;
  std::function<Outcome()> run;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// Evaluation parameters of the density sweeps: lambda_BS = 5e-5, xi = 5e-5,
// lambda_U = 1e-3, lambda_D = 2.5e-4, tau_dis = inf.
NetworkConfig density_sweep_base() {
  NetworkConfig c;
  c.lambda_bs = 5e-5;
  c.xi = 5e-5;
  c.lambda_u = 1e-3;
  c.lambda_d = 2.5e-4;
  c.tau_dis = kInfinity;
  return c;
}

Outcome hyp2f1_grid() {
  double worst = 0.0;
  int cases = 0;
  for (double alpha = 2.1; alpha <= 6.0 + 1e-9; alpha += 0.1) {
    const double delta = 2.0 / alpha;
    for (double tau_db = -10.0; tau_db <= 30.0 + 1e-9; tau_db += 2.5) {
      const double tau = std::pow(10.0, tau_db / 10.0);
      worst = std::max(worst, std::abs(hyp2f1(1.0, 1.0 - delta, 2.0 - delta, -tau) -
                                       oracle::hyp2f1_euler(1.0, 1.0 - delta, -tau)));
      ++cases;
      for (int n_c = 2; n_c <= 4; ++n_c) {
        worst = std::max(worst, std::abs(hyp2f1(n_c, -delta, 1.0 - delta, -tau / n_c) -
                                         oracle::hyp2f1_euler(n_c, -delta, -tau / n_c)));
        ++cases;
      }
    }
  }
  const double identity =
      std::abs(hyp2f1(1.0, 0.5, 1.5, -10.0) - std::atan(std::sqrt(10.0)) / std::sqrt(10.0));
  return {worst <= 1e-8 && identity <= 1e-10,
          fmt("%d grid points, max |err| = %.2e (<= 1e-8); identity |err| = %.2e (<= 1e-10)", cases, worst, identity)};
}

Outcome ofdma_exactness() {
  std::mt19937_64 rng(20240601);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const NetworkConfig c = oracle::random_config(rng, AccessScheme::ofdma);
    const DerivedIntensities d = derive_intensities(c);
    const oracle::Field f{d.q_u * d.lambda_ut / c.k_tones, c.q_d * d.lambda_dt / c.k_tones};
    oracle::Model m;
    m.alpha = c.alpha;
    m.tau = c.tau_bs;
    m.p_u = c.p_u;
    m.p_d = c.p_d;
    worst = std::max(worst, std::abs(cp_bs_ofdma_underlaid(c, d) - oracle::cp_bs(m, f, c.lambda_bs)));
  }
  return {worst <= 1e-6, fmt("20 random configs, max |CP_BS - quadrature| = %.2e (<= 1e-6)", worst)};
}

Outcome analytic_vs_mc(AccessScheme scheme, double floor) {
  NetworkConfig c = density_sweep_base();
  c.access_scheme = scheme;
  const CoverageReport a = evaluate_analytic(c);
  const McResult mc = run_monte_carlo(c, 50000, 12345);
  const double tol_c = std::max(floor, 3.0 * mc.cellular.ci_halfwidth);
  const double tol_d = std::max(floor, 3.0 * mc.d2d.ci_halfwidth);
  const double gap_c = std::abs(a.cp_cellular - mc.cellular.p_hat);
  const double gap_d = std::abs(a.cp_d2d - mc.d2d.p_hat);
  return {gap_c <= tol_c && gap_d <= tol_d,
          fmt("cellular: analytic %.4f vs MC %.4f, gap %.4f (<= %.4f); D2D: analytic %.4f vs MC %.4f, gap %.4f (<= %.4f)",
              a.cp_cellular, mc.cellular.p_hat, gap_c, tol_c, a.cp_d2d, mc.d2d.p_hat, gap_d, tol_d)};
}

Outcome gain_asymptotes() {
  NetworkConfig u = density_sweep_base();
  u.lambda_u = 1e-2;
  NetworkConfig d = density_sweep_base();
  d.lambda_d = 1e-2;
  const double gu = 100.0 * ase_gain(u).eta_ase;
  const double gd = 100.0 * ase_gain(d).eta_ase;
  const bool pu = std::abs(gu - 138.74) <= 2.0;
  const bool pd = std::abs(gd - 140.12) <= 2.0;
  return {pu && pd, fmt("lambda_U = 1e-2: %.2f%% vs 138.74%% (%s); lambda_D = 1e-2: %.2f%% vs 140.12%% (%s)", gu,
                        pu ? "ok" : "off by more than 2 pp", gd, pd ? "ok" : "off by more than 2 pp")};
}

Outcome overloading() {
  std::ostringstream detail;
  bool pass = true;
  double prev = 0.0;
  for (int k : {4, 6, 8, 10}) {
    NetworkConfig c = density_sweep_base();
    c.lambda_d = 0.0;
    c.k_tones = k;
    c.n_c = 2;
    c.j_codebooks = static_cast<int>(binomial(k, 2));
    c.lambda_u = 10.0 * c.j_codebooks * c.lambda_bs;
    const AseGain g = ase_gain(c);
    const double eta = g.eta_hat.value_or(NAN);
    const double overload = overloading_factor(c.j_codebooks, k);
    pass = pass && eta < overload && eta > prev;
    detail << "K=" << k << ": eta_hat " << fmt("%.4f", eta) << " < " << fmt("%.2f", overload) << "; ";
    prev = eta;
  }
  detail << (pass ? "strictly increasing in K" : "ordering violated");
  return {pass, detail.str()};
}

NetworkConfig activation_base() {
  NetworkConfig c = density_sweep_base();
  c.lambda_d = 2.5e-3;
  return c;
}

Outcome activation_optimum() {
  std::ostringstream detail;
  bool pass = true;
  double prev = -1.0;
  for (int j : {6, 12, 30}) {
    NetworkConfig c = activation_base();
    c.j_codebooks = j;
    const DerivedIntensities d = derive_intensities(c);
    const double closed = optimal_qd_full_d2d(c, d).q_d;
    const double grid = grid_search_qd(c, d, 1e-3).decision;
    const bool ok = std::abs(closed - grid) <= 1e-3 + 1e-12 && closed >= prev;
    pass = pass && ok;
    detail << "J=" << j << ": q* " << fmt("%.4f", closed) << " grid " << fmt("%.3f", grid) << "; ";
    prev = closed;
  }
  detail << (pass ? "within one step, non-decreasing in J" : "mismatch");
  return {pass, detail.str()};
}

Outcome sparse_regime() {
  NetworkConfig c = activation_base();
  c.lambda_u = 1e-4;
  c.lambda_d = 1e-4;
  c.tau_dis = 10.0;
  const DerivedIntensities d = derive_intensities(c);
  const ActivationOptimum opt = optimal_qd_sparse(c, d);
  const double grid = grid_search_qd(c, d, 1e-3).decision;
  return {opt.regime_measure <= kSparseRegimeThreshold && grid >= 0.99,
          fmt("rho_S tau_dis^2 = %.4f (<= 0.05), grid argmax %.3f (>= 0.99)", opt.regime_measure, grid)};
}

Outcome codebook_optimum() {
  NetworkConfig base = activation_base();
  base.coexistence = Coexistence::overlaid;
  const int reference = optimal_jc_dense(base).j_c;
  const int exhaustive = static_cast<int>(exhaustive_search_jc(base, true).decision);
  bool pass = reference == exhaustive;
  std::ostringstream detail;
  detail << "J_C* = " << reference << ", exhaustive " << exhaustive;
  const std::vector<std::pair<const char*, double NetworkConfig::*>> knobs = {
      {"lambda_bs", &NetworkConfig::lambda_bs},
      {"lambda_u", &NetworkConfig::lambda_u},
      {"p_u", &NetworkConfig::p_u},
      {"tau_bs", &NetworkConfig::tau_bs}};
  for (const auto& [name, member] : knobs) {
    for (double factor : {0.1, 10.0}) {
      NetworkConfig c = base;
      c.*member *= factor;
      const int closed = optimal_jc_dense(c).j_c;
      const int exh = static_cast<int>(exhaustive_search_jc(c, true).decision);
      if (closed != reference || exh != reference) {
        pass = false;
        detail << "; " << name << " x" << factor << ": " << closed << "/" << exh;
      }
    }
  }
  detail << (pass ? "; invariant under 10x perturbations of lambda_BS, lambda_U, P_U, tau_BS" : "");
  return {pass, detail.str()};
}

Outcome property_suites() {
  std::ostringstream detail;
  bool pass = true;

  // Coverage monotonicity over 200 random configurations.
  std::mt19937_64 rng(777);
  int violations = 0;
  for (int i = 0; i < 200; ++i) {
    const AccessScheme s = i % 2 == 0 ? AccessScheme::ofdma : AccessScheme::scma;
    const NetworkConfig c = oracle::random_config(rng, s);
    const CoverageReport r = evaluate_analytic(c);
    NetworkConfig u = c, d = c, res = c;
    u.lambda_u *= 1.5;
    d.lambda_d *= 1.5;
    if (s == AccessScheme::scma) res.j_codebooks += 5;
    else res.k_tones += 5;
    const CoverageReport ru = evaluate_analytic(u), rd = evaluate_analytic(d), rr = evaluate_analytic(res);
    const double eps = 1e-12;
    violations += ru.cp_cellular > r.cp_cellular + eps || ru.cp_d2d > r.cp_d2d + eps;
    violations += rd.cp_cellular > r.cp_cellular + eps || rd.cp_d2d > r.cp_d2d + eps;
    violations += rr.cp_cellular < r.cp_cellular - eps || rr.cp_d2d < r.cp_d2d - eps;
  }
  pass = pass && violations == 0;
  detail << "monotonicity violations " << violations << "/600";

  // Determinism across worker counts.
  const NetworkConfig base = density_sweep_base();
  const McResult one = run_monte_carlo(base, 2000, 99, {0.0, 1});
  const McResult four = run_monte_carlo(base, 2000, 99, {0.0, 4});
  const bool same = one.cellular.successes == four.cellular.successes && one.d2d.successes == four.d2d.successes &&
                    one.active_cellular_density == four.active_cellular_density &&
                    one.active_d2d_density == four.active_d2d_density;
  pass = pass && same;
  detail << "; workers 1 vs 4 " << (same ? "identical" : "differ");

  // Within-cell resource distinctness and the access-probability density.
  int bad = 0;
  std::vector<double> density;
  for (int i = 0; i < 1000; ++i) {
    const Snapshot s = allocate_resources(sample_snapshot(base, substream_seed(4242, i)), base);
    try {
      check_allocation(s, base);
    } catch (const std::exception&) {
      ++bad;
    }
    std::size_t active = 0;
    for (std::size_t u = 1; u < s.cellular_active.size(); ++u) active += s.cellular_active[u];
    density.push_back(static_cast<double>(active) / s.area());
  }
  pass = pass && bad == 0;
  detail << "; allocation violations " << bad << "/1000";

  double mean = 0.0;
  for (double x : density) mean += x;
  mean /= density.size();
  double var = 0.0;
  for (double x : density) var += (x - mean) * (x - mean);
  const double se = std::sqrt(var / (density.size() - 1) / density.size());
  const DerivedIntensities d = derive_intensities(base);
  const double expected = d.q_u * d.lambda_ut;
  const bool match = std::abs(mean - expected) <= 3.0 * se;
  pass = pass && match;
  detail << fmt("; active density %.4e vs q_U lambda_UT %.4e (|diff| %.2e <= 3 SE %.2e)", mean, expected,
                std::abs(mean - expected), 3.0 * se);
  return {pass, detail.str()};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all = {
      {1, 1.0, hyp2f1_grid},
      {2, 10.0, ofdma_exactness},
      {3, 120.0, [] { return analytic_vs_mc(AccessScheme::ofdma, 0.02); }},
      {4, 120.0, [] { return analytic_vs_mc(AccessScheme::scma, 0.03); }},
      {5, 1.0, gain_asymptotes},
      {6, 5.0, overloading},
      {7, 10.0, activation_optimum},
      {8, 5.0, sparse_regime},
      {9, 5.0, codebook_optimum},
      {10, 300.0, property_suites},
  };
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));

  bool all_pass = true;
  for (const Criterion& c : all) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_s;
    const bool pass = o.pass && in_time;
    all_pass = all_pass && pass;
    std::printf("criterion %d: %s %s [%.2f s, limit %.0f s%s]\n", c.id, pass ? "PASS" : "FAIL", o.detail.c_str(),
                secs, c.limit_s, in_time ? "" : ", exceeded");
    std::fflush(stdout);
  }
  return all_pass ? 0 : 1;
}
