#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "scmad2d/analytics.hpp"
#include "scmad2d/topology.hpp"

namespace scmad2d {

/// Applies one `key = value` assignment. Linear keys: lambda_bs, lambda_u,
/// lambda_d, p_u, p_d (mW), alpha, xi, tau_dis (m, accepts inf), tau_bs,
/// tau_dr, k_tones, n_c, j_codebooks, j_cell, q_d. Decibel keys: tau_bs_db,
/// tau_dr_db, p_u_dbm, p_d_dbm. Enumerations: coexistence, access_scheme,
/// access_rule. Throws ValidationError for unknown keys or malformed values.
void set_config_value(NetworkConfig& cfg, const std::string& key, const std::string& value);

/// Numeric value of a linear key (enumerations are not readable).
double get_config_value(const NetworkConfig& cfg, const std::string& key);

/// Keys accepted by set_config_value.
const std::vector<std::string>& config_keys();

/// Parses `key = value` lines ('#' starts a comment) on top of `base` and
/// validates the result. Errors carry the 1-based line number.
NetworkConfig parse_config(std::istream& in, const NetworkConfig& base = {});
NetworkConfig load_config(const std::string& path, const NetworkConfig& base = {});

enum class Engine { analytic, monte_carlo };
std::string to_string(Engine e);

/// One curve of a scenario: a named configuration variant.
struct Series {
  std::string name;
  std::function<void(NetworkConfig&)> apply;
  bool dense_cellular = false;  // overlaid cellular ASE with saturated cells
};

struct SweepSpec {
  std::string scenario = "custom";
  NetworkConfig base;
  std::string swept_key;
  std::vector<double> values;
  std::vector<Series> series;
  /// Run after the swept value is set, e.g. J = C(K, 2) for a K sweep.
  std::function<void(NetworkConfig&)> adjust;
  std::vector<Engine> engines{Engine::analytic};
  std::uint64_t trials = 10000;
  std::uint64_t seed = 1;
  unsigned workers = 0;
  std::string output_path;

  /// Throws ValidationError for empty or non-monotone values, an unknown
  /// swept key, no engines, or fewer than 1000 Monte Carlo trials.
  void validate() const;
};

const std::vector<std::string>& scenario_names();

/// Preset parameters, sweep and series for a named scenario. "custom" leaves
/// the sweep empty and carries a single default series.
SweepSpec scenario_preset(const std::string& name);

/// Parses KEY=start:stop:steps into `steps` evenly spaced values (inclusive).
void set_sweep_range(SweepSpec& spec, const std::string& range);

/// Parses a comma-separated engine list: analytic, mc (or monte_carlo).
std::vector<Engine> parse_engines(const std::string& list);

/// Rounds to 6 significant digits, the precision of the swept_value column.
double normalize_swept_value(double v);

struct SweepRow {
  double swept_value = 0.0;
  std::string series;
  std::string engine;
  double cp_cell = 0.0;
  double cp_d2d = 0.0;
  double ase_cell = 0.0;
  double ase_d2d = 0.0;
  double ase_total = 0.0;
  std::optional<double> ase_gain;
  std::optional<double> utility;
  std::optional<double> overload;
  std::optional<double> ci_halfwidth;
  std::string error;

  bool operator==(const SweepRow&) const = default;
};

struct SweepResult {
  std::string swept_key;
  std::vector<SweepRow> rows;
};

/// Evaluates every value x series x engine in order. Engine failures land in
/// the row's error column.
SweepResult run_sweep(const SweepSpec& spec);

extern const char* const kCsvHeader;

/// Header plus one line per row. swept_value is printed with 6 significant
/// digits in scientific notation, other reals with 17; absent values are empty.
void write_csv(std::ostream& out, const SweepResult& result);
SweepResult read_csv(std::istream& in);

/// Writes the CSV to spec.output_path (or `out` when the path is empty or "-").
void emit_sweep(const SweepSpec& spec, const SweepResult& result, std::ostream& out);

enum class OptimizeMode { qd, jc };
OptimizeMode parse_optimize_mode(const std::string& s);

struct OptimizeReport {
  OptimizeMode mode = OptimizeMode::qd;
  std::string method;  // closed form used
  double closed_form = 0.0;
  double validator = 0.0;
  double utility_closed = 0.0;
  double utility_validator = 0.0;
  bool agree = false;
  std::vector<std::pair<std::string, double>> details;
  std::vector<std::string> warnings;
};

/// qd: sparse-regime optimum (finite tau_dis) or the closed-form interior
/// optimum (tau_dis = inf), validated by a 1e-3 grid search; agreement within
/// one grid step. jc: dense-cellular codebook split validated by exhaustive
/// search; agreement is exact.
OptimizeReport run_optimize(const NetworkConfig& cfg, OptimizeMode mode);
void write_report(std::ostream& out, const OptimizeReport& report);

}  // namespace scmad2d
