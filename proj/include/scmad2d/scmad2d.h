#ifndef SCMAD2D_H
#define SCMAD2D_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SCMAD2D_API __declspec(dllexport)
#else
#define SCMAD2D_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum scmad2d_status {
  SCMAD2D_OK = 0,
  SCMAD2D_INVALID_ARGUMENT = 1, /* null handle or pointer, unknown name */
  SCMAD2D_VALIDATION = 2,       /* configuration or input rejected */
  SCMAD2D_NUMERIC = 3,          /* domain violation, non-convergence, degenerate sample */
  SCMAD2D_IO = 4
} scmad2d_status;

typedef struct scmad2d_config scmad2d_config;
typedef struct scmad2d_sweep scmad2d_sweep;

typedef struct scmad2d_report {
  double cp_cellular;
  double cp_d2d;
  double ase_cellular; /* nats/(s Hz m^2) */
  double ase_d2d;
  double ase_total;
  double ci_halfwidth; /* 0 for closed-form results */
  double ci_cellular;
  double ci_d2d;
  double active_cellular_density; /* simulated only, per m^2 */
  double active_d2d_density;
  int monte_carlo;
} scmad2d_report;

typedef struct scmad2d_optimum {
  double closed_form;
  double validator;
  double utility_closed;
  double utility_validator;
  int agree;
} scmad2d_optimum;

/* Library version string. */
SCMAD2D_API const char* scmad2d_version(void);

/* Message of the last failed call on this thread; empty after success. */
SCMAD2D_API const char* scmad2d_last_error(void);

/* Releases strings returned through char** out parameters. */
SCMAD2D_API void scmad2d_string_free(char* s);

/* Configuration handle initialised to the default parameter set. */
SCMAD2D_API scmad2d_status scmad2d_config_new(scmad2d_config** out);
SCMAD2D_API scmad2d_status scmad2d_config_clone(const scmad2d_config* cfg, scmad2d_config** out);
SCMAD2D_API void scmad2d_config_free(scmad2d_config* cfg);

/* Applies `key = value` lines from a file on top of cfg and validates. */
SCMAD2D_API scmad2d_status scmad2d_config_load(scmad2d_config* cfg, const char* path);

/* Sets one key; the value is parsed as in a config file. Not validated. */
SCMAD2D_API scmad2d_status scmad2d_config_set(scmad2d_config* cfg, const char* key, const char* value);
SCMAD2D_API scmad2d_status scmad2d_config_get(const scmad2d_config* cfg, const char* key, double* out);
SCMAD2D_API scmad2d_status scmad2d_config_validate(const scmad2d_config* cfg);

/* Replaces cfg with the base parameters of a named scenario. */
SCMAD2D_API scmad2d_status scmad2d_config_from_scenario(scmad2d_config* cfg, const char* scenario);

SCMAD2D_API scmad2d_status scmad2d_evaluate_analytic(const scmad2d_config* cfg, scmad2d_report* out);

/* workers = 0 uses every hardware thread; results do not depend on it. */
SCMAD2D_API scmad2d_status scmad2d_estimate_coverage(const scmad2d_config* cfg, uint64_t trials, uint64_t seed,
                                                     unsigned workers, scmad2d_report* out);

/* SCMA over OFDMA system ASE ratio; eta_hat is NaN unless tau_bs == tau_dr. */
SCMAD2D_API scmad2d_status scmad2d_ase_gain(const scmad2d_config* cfg, double* eta_ase, double* eta_hat);

SCMAD2D_API scmad2d_status scmad2d_hyp2f1(double a, double b, double c, double z, double* out);

/* mode is "qd" or "jc"; report (optional) receives a printable summary. */
SCMAD2D_API scmad2d_status scmad2d_optimize(const scmad2d_config* cfg, const char* mode, scmad2d_optimum* out,
                                            char** report);

/* Samples and allocates one snapshot and writes the point dump to path. */
SCMAD2D_API scmad2d_status scmad2d_snapshot_dump(const scmad2d_config* cfg, uint64_t seed, const char* path);

/* Sweep over a scenario preset; "custom" starts from cfg defaults and needs a range. */
SCMAD2D_API scmad2d_status scmad2d_sweep_new(const char* scenario, scmad2d_sweep** out);
SCMAD2D_API void scmad2d_sweep_free(scmad2d_sweep* sweep);

/* Overrides the preset base parameters with the keys present in a config file. */
SCMAD2D_API scmad2d_status scmad2d_sweep_load_config(scmad2d_sweep* sweep, const char* path);
SCMAD2D_API scmad2d_status scmad2d_sweep_set_base(scmad2d_sweep* sweep, const scmad2d_config* cfg);
SCMAD2D_API scmad2d_status scmad2d_sweep_set_range(scmad2d_sweep* sweep, const char* range);
SCMAD2D_API scmad2d_status scmad2d_sweep_set_engines(scmad2d_sweep* sweep, const char* engines);
SCMAD2D_API scmad2d_status scmad2d_sweep_set_trials(scmad2d_sweep* sweep, uint64_t trials);
SCMAD2D_API scmad2d_status scmad2d_sweep_set_seed(scmad2d_sweep* sweep, uint64_t seed);
SCMAD2D_API scmad2d_status scmad2d_sweep_set_workers(scmad2d_sweep* sweep, unsigned workers);

/* Runs the sweep and writes CSV to path ("-" or NULL for stdout). */
SCMAD2D_API scmad2d_status scmad2d_sweep_run(scmad2d_sweep* sweep, const char* path);
SCMAD2D_API scmad2d_status scmad2d_sweep_row_count(const scmad2d_sweep* sweep, size_t* out);
/* Number of rows of the last run whose error column is non-empty. */
SCMAD2D_API scmad2d_status scmad2d_sweep_error_count(const scmad2d_sweep* sweep, size_t* out);

#ifdef __cplusplus
}
#endif

#endif
