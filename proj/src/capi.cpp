#include "scmad2d/scmad2d.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>

#include "scmad2d/cli.hpp"
#include "scmad2d/error.hpp"
#include "scmad2d/simulator.hpp"
#include "scmad2d/specialfn.hpp"

struct scmad2d_config {
  scmad2d::NetworkConfig cfg;
};

struct scmad2d_sweep {
  scmad2d::SweepSpec spec;
  scmad2d::SweepResult last;
};

namespace {

thread_local std::string g_last_error;

scmad2d_status fail(scmad2d_status code, const std::string& message) {
  g_last_error = message;
  return code;
}

scmad2d_status status_of(const scmad2d::Error& e) {
  switch (e.kind()) {
    case scmad2d::ErrorKind::validation:
      return SCMAD2D_VALIDATION;
    case scmad2d::ErrorKind::io:
      return SCMAD2D_IO;
    case scmad2d::ErrorKind::domain:
    case scmad2d::ErrorKind::numeric:
      return SCMAD2D_NUMERIC;
  }
  return SCMAD2D_NUMERIC;
}

template <class F>
scmad2d_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return SCMAD2D_OK;
  } catch (const scmad2d::Error& e) {
    return fail(status_of(e), e.what());
  } catch (const std::bad_alloc&) {
    return fail(SCMAD2D_NUMERIC, "out of memory");
  } catch (const std::exception& e) {
    return fail(SCMAD2D_NUMERIC, e.what());
  }
}

#define SCMAD2D_REQUIRE(ptr)                                                   \
  do {                                                                         \
    if ((ptr) == nullptr) return fail(SCMAD2D_INVALID_ARGUMENT, #ptr " is null"); \
  } while (0)

void fill_report(const scmad2d::CoverageReport& r, scmad2d_report* out) {
  out->cp_cellular = r.cp_cellular;
  out->cp_d2d = r.cp_d2d;
  out->ase_cellular = r.ase_cellular;
  out->ase_d2d = r.ase_d2d;
  out->ase_total = r.ase_total;
  out->ci_halfwidth = r.ci_halfwidth;
  out->ci_cellular = r.ci_cellular;
  out->ci_d2d = r.ci_d2d;
  out->active_cellular_density = 0.0;
  out->active_d2d_density = 0.0;
  out->monte_carlo = r.provenance == scmad2d::Provenance::monte_carlo ? 1 : 0;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* scmad2d_version(void) { return "1.0.0"; }

const char* scmad2d_last_error(void) { return g_last_error.c_str(); }

void scmad2d_string_free(char* s) { std::free(s); }

scmad2d_status scmad2d_config_new(scmad2d_config** out) {
  SCMAD2D_REQUIRE(out);
  return guarded([&] { *out = new scmad2d_config{}; });
}

scmad2d_status scmad2d_config_clone(const scmad2d_config* cfg, scmad2d_config** out) {
  SCMAD2D_REQUIRE(cfg);
  SCMAD2D_REQUIRE(out);
  return guarded([&] { *out = new scmad2d_config{*cfg}; });
}

void scmad2d_config_free(scmad2d_config* cfg) { delete cfg; }

scmad2d_status scmad2d_config_load(scmad2d_config* cfg, const char* path) {
  SCMAD2D_REQUIRE(cfg);
  SCMAD2D_REQUIRE(path);
  return guarded([&] { cfg->cfg = scmad2d::load_config(path, cfg->cfg); });
}

scmad2d_status scmad2d_config_set(scmad2d_config* cfg, const char* key, const char* value) {
  SCMAD2D_REQUIRE(cfg);
  SCMAD2D_REQUIRE(key);
  SCMAD2D_REQUIRE(value);
  return guarded([&] { scmad2d::set_config_value(cfg->cfg, key, value); });
}

scmad2d_status scmad2d_config_get(const scmad2d_config* cfg, const char* key, double* out) {
  SCMAD2D_REQUIRE(cfg);
  SCMAD2D_REQUIRE(key);
  SCMAD2D_REQUIRE(out);
  return guarded([&] { *out = scmad2d::get_config_value(cfg->cfg, key); });
}

scmad2d_status scmad2d_config_validate(const scmad2d_config* cfg) {
  SCMAD2D_REQUIRE(cfg);
  return guarded([&] { cfg->cfg.validate(); });
}

scmad2d_status scmad2d_config_from_scenario(scmad2d_config* cfg, const char* scenario) {
  SCMAD2D_REQUIRE(cfg);
  SCMAD2D_REQUIRE(scenario);
  return guarded([&] { cfg->cfg = scmad2d::scenario_preset(scenario).base; });
}

scmad2d_status scmad2d_evaluate_analytic(const scmad2d_config* cfg, scmad2d_report* out) {
  SCMAD2D_REQUIRE(cfg);
  SCMAD2D_REQUIRE(out);
  return guarded([&] { fill_report(scmad2d::evaluate_analytic(cfg->cfg), out); });
}

scmad2d_status scmad2d_estimate_coverage(const scmad2d_config* cfg, uint64_t trials, uint64_t seed,
                                         unsigned workers, scmad2d_report* out) {
  SCMAD2D_REQUIRE(cfg);
  SCMAD2D_REQUIRE(out);
  return guarded([&] {
    scmad2d::SimulationOptions opts;
    opts.workers = workers;
    const scmad2d::McResult mc = scmad2d::run_monte_carlo(cfg->cfg, trials, seed, opts);
    fill_report(mc.report, out);
    out->active_cellular_density = mc.active_cellular_density;
    out->active_d2d_density = mc.active_d2d_density;
  });
}

scmad2d_status scmad2d_ase_gain(const scmad2d_config* cfg, double* eta_ase, double* eta_hat) {
  SCMAD2D_REQUIRE(cfg);
  SCMAD2D_REQUIRE(eta_ase);
  return guarded([&] {
    const scmad2d::AseGain g = scmad2d::ase_gain(cfg->cfg);
    *eta_ase = g.eta_ase;
    if (eta_hat != nullptr) *eta_hat = g.eta_hat.value_or(std::numeric_limits<double>::quiet_NaN());
  });
}

scmad2d_status scmad2d_hyp2f1(double a, double b, double c, double z, double* out) {
  SCMAD2D_REQUIRE(out);
  return guarded([&] { *out = scmad2d::hyp2f1(a, b, c, z); });
}

scmad2d_status scmad2d_optimize(const scmad2d_config* cfg, const char* mode, scmad2d_optimum* out, char** report) {
  SCMAD2D_REQUIRE(cfg);
  SCMAD2D_REQUIRE(mode);
  return guarded([&] {
    const scmad2d::OptimizeReport r = scmad2d::run_optimize(cfg->cfg, scmad2d::parse_optimize_mode(mode));
    if (out != nullptr) {
      out->closed_form = r.closed_form;
      out->validator = r.validator;
      out->utility_closed = r.utility_closed;
      out->utility_validator = r.utility_validator;
      out->agree = r.agree ? 1 : 0;
    }
    if (report != nullptr) {
      std::ostringstream text;
      scmad2d::write_report(text, r);
      *report = copy_string(text.str());
    }
  });
}

scmad2d_status scmad2d_snapshot_dump(const scmad2d_config* cfg, uint64_t seed, const char* path) {
  SCMAD2D_REQUIRE(cfg);
  SCMAD2D_REQUIRE(path);
  return guarded([&] {
    const scmad2d::Snapshot s = scmad2d::allocate_resources(scmad2d::sample_snapshot(cfg->cfg, seed), cfg->cfg);
    if (std::strcmp(path, "-") == 0) {
      scmad2d::write_snapshot(std::cout, s);
      std::cout.flush();
      return;
    }
    std::ofstream file(path);
    if (!file) throw scmad2d::IoError(std::string("cannot open output file '") + path + "'");
    scmad2d::write_snapshot(file, s);
    if (!file) throw scmad2d::IoError(std::string("failed writing '") + path + "'");
  });
}

scmad2d_status scmad2d_sweep_new(const char* scenario, scmad2d_sweep** out) {
  SCMAD2D_REQUIRE(scenario);
  SCMAD2D_REQUIRE(out);
  return guarded([&] { *out = new scmad2d_sweep{scmad2d::scenario_preset(scenario), {}}; });
}

void scmad2d_sweep_free(scmad2d_sweep* sweep) { delete sweep; }

scmad2d_status scmad2d_sweep_load_config(scmad2d_sweep* sweep, const char* path) {
  SCMAD2D_REQUIRE(sweep);
  SCMAD2D_REQUIRE(path);
  return guarded([&] { sweep->spec.base = scmad2d::load_config(path, sweep->spec.base); });
}

scmad2d_status scmad2d_sweep_set_base(scmad2d_sweep* sweep, const scmad2d_config* cfg) {
  SCMAD2D_REQUIRE(sweep);
  SCMAD2D_REQUIRE(cfg);
  return guarded([&] {
    cfg->cfg.validate();
    sweep->spec.base = cfg->cfg;
  });
}

scmad2d_status scmad2d_sweep_set_range(scmad2d_sweep* sweep, const char* range) {
  SCMAD2D_REQUIRE(sweep);
  SCMAD2D_REQUIRE(range);
  return guarded([&] { scmad2d::set_sweep_range(sweep->spec, range); });
}

scmad2d_status scmad2d_sweep_set_engines(scmad2d_sweep* sweep, const char* engines) {
  SCMAD2D_REQUIRE(sweep);
  SCMAD2D_REQUIRE(engines);
  return guarded([&] { sweep->spec.engines = scmad2d::parse_engines(engines); });
}

scmad2d_status scmad2d_sweep_set_trials(scmad2d_sweep* sweep, uint64_t trials) {
  SCMAD2D_REQUIRE(sweep);
  return guarded([&] { sweep->spec.trials = trials; });
}

scmad2d_status scmad2d_sweep_set_seed(scmad2d_sweep* sweep, uint64_t seed) {
  SCMAD2D_REQUIRE(sweep);
  return guarded([&] { sweep->spec.seed = seed; });
}

scmad2d_status scmad2d_sweep_set_workers(scmad2d_sweep* sweep, unsigned workers) {
  SCMAD2D_REQUIRE(sweep);
  return guarded([&] { sweep->spec.workers = workers; });
}

scmad2d_status scmad2d_sweep_run(scmad2d_sweep* sweep, const char* path) {
  SCMAD2D_REQUIRE(sweep);
  return guarded([&] {
    sweep->spec.output_path = path == nullptr ? "" : path;
    sweep->last = scmad2d::run_sweep(sweep->spec);
    scmad2d::emit_sweep(sweep->spec, sweep->last, std::cout);
    std::cout.flush();
  });
}

scmad2d_status scmad2d_sweep_row_count(const scmad2d_sweep* sweep, size_t* out) {
  SCMAD2D_REQUIRE(sweep);
  SCMAD2D_REQUIRE(out);
  *out = sweep->last.rows.size();
  g_last_error.clear();
  return SCMAD2D_OK;
}

scmad2d_status scmad2d_sweep_error_count(const scmad2d_sweep* sweep, size_t* out) {
  SCMAD2D_REQUIRE(sweep);
  SCMAD2D_REQUIRE(out);
  size_t n = 0;
  for (const auto& row : sweep->last.rows)
    if (!row.error.empty()) ++n;
  *out = n;
  g_last_error.clear();
  return SCMAD2D_OK;
}

}  // extern "C"
