#include "scmad2d/cli.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "scmad2d/error.hpp"
#include "scmad2d/optimizer.hpp"
#include "scmad2d/simulator.hpp"

namespace scmad2d {

namespace {

constexpr double kGridStep = 1e-3;

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double parse_real(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  if (t.empty()) throw ValidationError("missing value for '" + key + "'");
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(t.c_str(), &end);
  if (end != t.c_str() + t.size() || errno == ERANGE || std::isnan(v))
    throw ValidationError("malformed number '" + t + "' for '" + key + "'");
  return v;
}

int as_integer(const std::string& key, double v) {
  if (!std::isfinite(v) || v != std::floor(v) || std::abs(v) > 1e9)
    throw ValidationError("'" + key + "' must be an integer");
  return static_cast<int>(v);
}

double from_db(double db) { return std::pow(10.0, db / 10.0); }

using Setter = void (*)(NetworkConfig&, double);

const std::map<std::string, Setter>& numeric_setters() {
  static const std::map<std::string, Setter> table = {
      {"lambda_bs", [](NetworkConfig& c, double v) { c.lambda_bs = v; }},
      {"lambda_u", [](NetworkConfig& c, double v) { c.lambda_u = v; }},
      {"lambda_d", [](NetworkConfig& c, double v) { c.lambda_d = v; }},
      {"p_u", [](NetworkConfig& c, double v) { c.p_u = v; }},
      {"p_d", [](NetworkConfig& c, double v) { c.p_d = v; }},
      {"p_u_dbm", [](NetworkConfig& c, double v) { c.p_u = from_db(v); }},
      {"p_d_dbm", [](NetworkConfig& c, double v) { c.p_d = from_db(v); }},
      {"alpha", [](NetworkConfig& c, double v) { c.alpha = v; }},
      {"xi", [](NetworkConfig& c, double v) { c.xi = v; }},
      {"tau_dis", [](NetworkConfig& c, double v) { c.tau_dis = v; }},
      {"tau_bs", [](NetworkConfig& c, double v) { c.tau_bs = v; }},
      {"tau_dr", [](NetworkConfig& c, double v) { c.tau_dr = v; }},
      {"tau_bs_db", [](NetworkConfig& c, double v) { c.tau_bs = from_db(v); }},
      {"tau_dr_db", [](NetworkConfig& c, double v) { c.tau_dr = from_db(v); }},
      {"k_tones", [](NetworkConfig& c, double v) { c.k_tones = as_integer("k_tones", v); }},
      {"n_c", [](NetworkConfig& c, double v) { c.n_c = as_integer("n_c", v); }},
      {"j_codebooks", [](NetworkConfig& c, double v) { c.j_codebooks = as_integer("j_codebooks", v); }},
      {"j_cell", [](NetworkConfig& c, double v) { c.j_cell = as_integer("j_cell", v); }},
      {"q_d", [](NetworkConfig& c, double v) { c.q_d = v; }},
  };
  return table;
}

void set_number(NetworkConfig& cfg, const std::string& key, double v) {
  const auto& table = numeric_setters();
  const auto it = table.find(key);
  if (it == table.end()) throw ValidationError("unknown numeric key '" + key + "'");
  if (std::isinf(v) && key != "tau_dis") throw ValidationError("'" + key + "' must be finite");
  it->second(cfg, v);
}

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_swept(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.5e", v);
  return buf;
}

std::string format_optional(const std::optional<double>& v) { return v ? format_real(*v) : std::string(); }

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::vector<std::string> csv_split(const std::string& line, std::size_t line_no) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (quoted) throw ValidationError("csv line " + std::to_string(line_no) + ": unterminated quote");
  fields.push_back(cur);
  return fields;
}

std::optional<double> parse_optional(const std::string& s, std::size_t line_no) {
  if (s.empty()) return std::nullopt;
  try {
    return parse_real("csv", s);
  } catch (const ValidationError&) {
    throw ValidationError("csv line " + std::to_string(line_no) + ": malformed number '" + s + "'");
  }
}

double parse_required(const std::string& s, std::size_t line_no) {
  const auto v = parse_optional(s, line_no);
  if (!v) throw ValidationError("csv line " + std::to_string(line_no) + ": missing value");
  return *v;
}

std::optional<double> utility_of(double ase_c, double ase_d) {
  if (!(ase_c > 0.0) || !(ase_d > 0.0)) return std::nullopt;
  return std::log(ase_c) + std::log(ase_d);
}

double overload_of(const NetworkConfig& cfg) {
  return cfg.access_scheme == AccessScheme::scma ? overloading_factor(cfg.j_codebooks, cfg.k_tones) : 1.0;
}

void fill(SweepRow& row, const CoverageReport& r) {
  row.cp_cell = r.cp_cellular;
  row.cp_d2d = r.cp_d2d;
  row.ase_cell = r.ase_cellular;
  row.ase_d2d = r.ase_d2d;
  row.ase_total = r.ase_total;
  row.utility = utility_of(r.ase_cellular, r.ase_d2d);
}

SweepRow evaluate_row(const SweepSpec& spec, const Series& series, Engine engine, double value) {
  SweepRow row;
  row.swept_value = value;
  row.series = series.name;
  row.engine = to_string(engine);
  try {
    NetworkConfig cfg = spec.base;
    if (series.apply) series.apply(cfg);
    set_number(cfg, spec.swept_key, value);
    if (spec.adjust) spec.adjust(cfg);
    cfg.validate();
    row.overload = overload_of(cfg);
    if (engine == Engine::analytic) {
      CoverageReport r = evaluate_analytic(cfg);
      if (series.dense_cellular) {
        if (cfg.coexistence != Coexistence::overlaid)
          throw ValidationError("saturated-cell cellular ASE needs overlaid mode");
        r.ase_cellular = ase_cellular_dense_overlaid(cfg);
        r.ase_total = r.ase_cellular + r.ase_d2d;
      }
      fill(row, r);
      if (cfg.access_scheme == AccessScheme::scma && cfg.coexistence == Coexistence::underlaid)
        row.ase_gain = ase_gain(cfg).eta_ase;
    } else {
      if (series.dense_cellular) throw ValidationError("saturated-cell cellular ASE has no simulated counterpart");
      SimulationOptions opts;
      opts.workers = spec.workers;
      const McResult mc = run_monte_carlo(cfg, spec.trials, spec.seed, opts);
      fill(row, mc.report);
      row.ci_halfwidth = mc.report.ci_halfwidth;
    }
  } catch (const std::exception& e) {
    const SweepRow keep = row;
    row = SweepRow{};
    row.swept_value = keep.swept_value;
    row.series = keep.series;
    row.engine = keep.engine;
    row.error = e.what();
  }
  return row;
}

Series plain(const std::string& name, std::function<void(NetworkConfig&)> apply = {}) {
  Series s;
  s.name = name;
  s.apply = std::move(apply);
  return s;
}

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v;
  for (int i = 0; i < n; ++i) v.push_back(n == 1 ? a : a + (b - a) * i / (n - 1));
  return v;
}

std::vector<double> integers(int a, int b) {
  std::vector<double> v;
  for (int i = a; i <= b; ++i) v.push_back(i);
  return v;
}

const std::vector<double> kDensityGrid = {1e-4, 2e-4, 5e-4, 1e-3, 2e-3, 5e-3, 1e-2};

void use_ofdma(NetworkConfig& c) {
  c.access_scheme = AccessScheme::ofdma;
  c.coexistence = Coexistence::underlaid;
}

void use_scma_underlaid(NetworkConfig& c) {
  c.access_scheme = AccessScheme::scma;
  c.coexistence = Coexistence::underlaid;
}

void use_scma_overlaid(NetworkConfig& c) {
  c.access_scheme = AccessScheme::scma;
  c.coexistence = Coexistence::overlaid;
}

}  // namespace

void set_config_value(NetworkConfig& cfg, const std::string& key, const std::string& value) {
  const std::string v = trim(value);
  if (key == "coexistence") {
    if (v == "underlaid") cfg.coexistence = Coexistence::underlaid;
    else if (v == "overlaid") cfg.coexistence = Coexistence::overlaid;
    else throw ValidationError("coexistence must be underlaid or overlaid, got '" + v + "'");
    return;
  }
  if (key == "access_scheme") {
    if (v == "ofdma") cfg.access_scheme = AccessScheme::ofdma;
    else if (v == "scma") cfg.access_scheme = AccessScheme::scma;
    else throw ValidationError("access_scheme must be ofdma or scma, got '" + v + "'");
    return;
  }
  if (key == "access_rule") {
    if (v == "active_fraction") cfg.access_rule = AccessRule::active_fraction;
    else if (v == "literal") cfg.access_rule = AccessRule::literal;
    else throw ValidationError("access_rule must be active_fraction or literal, got '" + v + "'");
    return;
  }
  if (!numeric_setters().count(key)) throw ValidationError("unknown key '" + key + "'");
  set_number(cfg, key, parse_real(key, v));
}

double get_config_value(const NetworkConfig& cfg, const std::string& key) {
  if (key == "lambda_bs") return cfg.lambda_bs;
  if (key == "lambda_u") return cfg.lambda_u;
  if (key == "lambda_d") return cfg.lambda_d;
  if (key == "p_u") return cfg.p_u;
  if (key == "p_d") return cfg.p_d;
  if (key == "p_u_dbm") return 10.0 * std::log10(cfg.p_u);
  if (key == "p_d_dbm") return 10.0 * std::log10(cfg.p_d);
  if (key == "alpha") return cfg.alpha;
  if (key == "xi") return cfg.xi;
  if (key == "tau_dis") return cfg.tau_dis;
  if (key == "tau_bs") return cfg.tau_bs;
  if (key == "tau_dr") return cfg.tau_dr;
  if (key == "tau_bs_db") return 10.0 * std::log10(cfg.tau_bs);
  if (key == "tau_dr_db") return 10.0 * std::log10(cfg.tau_dr);
  if (key == "k_tones") return cfg.k_tones;
  if (key == "n_c") return cfg.n_c;
  if (key == "j_codebooks") return cfg.j_codebooks;
  if (key == "j_cell") return cfg.j_cell;
  if (key == "q_d") return cfg.q_d;
  throw ValidationError("unknown numeric key '" + key + "'");
}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> k;
    for (const auto& [name, setter] : numeric_setters()) k.push_back(name);
    k.push_back("coexistence");
    k.push_back("access_scheme");
    k.push_back("access_rule");
    return k;
  }();
  return keys;
}

NetworkConfig parse_config(std::istream& in, const NetworkConfig& base) {
  NetworkConfig cfg = base;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (eq == std::string::npos) throw ValidationError(where + "expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    try {
      set_config_value(cfg, key, line.substr(eq + 1));
    } catch (const ValidationError& e) {
      throw ValidationError(where + e.what());
    }
  }
  cfg.validate();
  return cfg;
}

NetworkConfig load_config(const std::string& path, const NetworkConfig& base) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file '" + path + "'");
  return parse_config(in, base);
}

std::string to_string(Engine e) { return e == Engine::analytic ? "analytic" : "mc"; }

void SweepSpec::validate() const {
  base.validate();
  if (!numeric_setters().count(swept_key)) throw ValidationError("unknown swept key '" + swept_key + "'");
  if (values.empty()) throw ValidationError("sweep has no values");
  const bool up = values.size() < 2 || values[1] > values[0];
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (up ? !(values[i] > values[i - 1]) : !(values[i] < values[i - 1]))
      throw ValidationError("sweep values must be strictly monotone");
  }
  if (series.empty()) throw ValidationError("sweep has no series");
  if (engines.empty()) throw ValidationError("sweep has no engines");
  for (Engine e : engines)
    if (e == Engine::monte_carlo && trials < 1000) throw ValidationError("Monte Carlo sweeps need trials >= 1000");
}

const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names = {"fig3a", "fig3b", "fig4",  "fig5",  "fig6a",
                                                 "fig6b", "fig7a", "fig7b", "custom"};
  return names;
}

SweepSpec scenario_preset(const std::string& name) {
  SweepSpec s;
  s.scenario = name;
  NetworkConfig& b = s.base;
  b.lambda_bs = 5e-5;
  b.xi = 5e-5;
  b.tau_dis = kInfinity;

  if (name == "fig3a" || name == "fig3b") {
    b.lambda_u = 1e-3;
    b.lambda_d = 2.5e-4;
    s.swept_key = name == "fig3a" ? "lambda_u" : "lambda_d";
    s.values = kDensityGrid;
    s.series = {plain("ofdma", use_ofdma), plain("scma", use_scma_underlaid)};
  } else if (name == "fig4") {
    b.lambda_u = 5e-4;
    b.lambda_d = 2.5e-4;
    b.j_cell = 10;
    s.swept_key = "tau_dis";
    s.values = linspace(0.0, 500.0, 21);
    s.series = {plain("underlaid", use_scma_underlaid), plain("overlaid", use_scma_overlaid)};
  } else if (name == "fig5") {
    b.lambda_d = 0.0;
    s.swept_key = "k_tones";
    s.values = integers(4, 10);
    s.adjust = [](NetworkConfig& c) {
      c.j_codebooks = static_cast<int>(binomial(c.k_tones, c.n_c));
      c.lambda_u = 10.0 * c.j_codebooks * c.lambda_bs;
    };
    s.series = {plain("ofdma", use_ofdma), plain("scma", use_scma_underlaid)};
  } else if (name == "fig6a" || name == "fig6b") {
    b.lambda_u = 1e-3;
    b.lambda_d = 2.5e-3;
    use_scma_underlaid(b);
    s.swept_key = "q_d";
    if (name == "fig6a") {
      s.values = linspace(0.05, 1.0, 20);
      s.series = {plain("scma")};
    } else {
      s.values = linspace(0.01, 1.0, 100);
      s.series = {plain("tau_dis=inf"),
                  plain("tau_dis=100,xi=5e-5", [](NetworkConfig& c) { c.tau_dis = 100.0; }),
                  plain("tau_dis=100,xi=1e-4", [](NetworkConfig& c) {
                    c.tau_dis = 100.0;
                    c.xi = 1e-4;
                  })};
    }
  } else if (name == "fig7a" || name == "fig7b") {
    b.lambda_u = 1e-3;
    b.lambda_d = 2.5e-3;
    use_scma_overlaid(b);
    s.swept_key = "j_cell";
    s.values = integers(1, b.j_codebooks - 1);
    if (name == "fig7a") {
      s.series = {plain("overlaid")};
    } else {
      Series dense = plain("dense");
      dense.dense_cellular = true;
      s.series = {plain("overlaid"), dense};
    }
  } else if (name == "custom") {
    s.base = NetworkConfig{};
    s.series = {plain("custom")};
  } else {
    throw ValidationError("unknown scenario '" + name + "'");
  }
  return s;
}

double normalize_swept_value(double v) {
  if (!std::isfinite(v)) return v;
  return std::strtod(format_swept(v).c_str(), nullptr);
}

void set_sweep_range(SweepSpec& spec, const std::string& range) {
  const auto eq = range.find('=');
  if (eq == std::string::npos) throw ValidationError("sweep must look like KEY=start:stop:steps");
  const std::string key = trim(range.substr(0, eq));
  std::vector<std::string> parts;
  std::stringstream rest(range.substr(eq + 1));
  std::string part;
  while (std::getline(rest, part, ':')) parts.push_back(part);
  if (parts.size() != 3) throw ValidationError("sweep must look like KEY=start:stop:steps");
  if (!numeric_setters().count(key)) throw ValidationError("unknown swept key '" + key + "'");
  const double start = parse_real("start", parts[0]);
  const double stop = parse_real("stop", parts[1]);
  const int steps = as_integer("steps", parse_real("steps", parts[2]));
  if (steps < 1) throw ValidationError("sweep steps must be >= 1");
  spec.swept_key = key;
  spec.values.clear();
  for (double v : linspace(start, stop, steps)) spec.values.push_back(normalize_swept_value(v));
}

std::vector<Engine> parse_engines(const std::string& list) {
  std::vector<Engine> out;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (item == "analytic") out.push_back(Engine::analytic);
    else if (item == "mc" || item == "monte_carlo") out.push_back(Engine::monte_carlo);
    else throw ValidationError("unknown engine '" + item + "'");
  }
  if (out.empty()) throw ValidationError("no engines given");
  return out;
}

SweepResult run_sweep(const SweepSpec& spec) {
  spec.validate();
  SweepResult result;
  result.swept_key = spec.swept_key;
  for (double raw : spec.values) {
    const double value = normalize_swept_value(raw);
    for (const Series& series : spec.series)
      for (Engine engine : spec.engines) result.rows.push_back(evaluate_row(spec, series, engine, value));
  }
  return result;
}

const char* const kCsvHeader =
    "swept_value,series,engine,cp_cell,cp_d2d,ase_cell,ase_d2d,ase_total,ase_gain,utility,overload,ci_halfwidth,"
    "error";

void write_csv(std::ostream& out, const SweepResult& result) {
  out << "# swept_key=" << result.swept_key << "\n" << kCsvHeader << "\n";
  for (const SweepRow& r : result.rows) {
    out << format_swept(r.swept_value) << ',' << csv_quote(r.series) << ',' << csv_quote(r.engine) << ','
        << format_real(r.cp_cell) << ',' << format_real(r.cp_d2d) << ',' << format_real(r.ase_cell) << ','
        << format_real(r.ase_d2d) << ',' << format_real(r.ase_total) << ',' << format_optional(r.ase_gain) << ','
        << format_optional(r.utility) << ',' << format_optional(r.overload) << ','
        << format_optional(r.ci_halfwidth) << ',' << csv_quote(r.error) << "\n";
  }
}

SweepResult read_csv(std::istream& in) {
  SweepResult result;
  std::string line;
  std::size_t line_no = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.rfind("# swept_key=", 0) == 0) {
      result.swept_key = line.substr(12);
      continue;
    }
    if (line[0] == '#') continue;
    if (!header) {
      if (line != kCsvHeader) throw ValidationError("csv line " + std::to_string(line_no) + ": unexpected header");
      header = true;
      continue;
    }
    const auto f = csv_split(line, line_no);
    if (f.size() != 13) throw ValidationError("csv line " + std::to_string(line_no) + ": expected 13 fields");
    SweepRow r;
    r.swept_value = parse_required(f[0], line_no);
    r.series = f[1];
    r.engine = f[2];
    r.cp_cell = parse_required(f[3], line_no);
    r.cp_d2d = parse_required(f[4], line_no);
    r.ase_cell = parse_required(f[5], line_no);
    r.ase_d2d = parse_required(f[6], line_no);
    r.ase_total = parse_required(f[7], line_no);
    r.ase_gain = parse_optional(f[8], line_no);
    r.utility = parse_optional(f[9], line_no);
    r.overload = parse_optional(f[10], line_no);
    r.ci_halfwidth = parse_optional(f[11], line_no);
    r.error = f[12];
    result.rows.push_back(std::move(r));
  }
  if (!header) throw ValidationError("csv has no header");
  return result;
}

void emit_sweep(const SweepSpec& spec, const SweepResult& result, std::ostream& out) {
  if (spec.output_path.empty() || spec.output_path == "-") {
    write_csv(out, result);
    return;
  }
  std::ofstream file(spec.output_path);
  if (!file) throw IoError("cannot open output file '" + spec.output_path + "'");
  write_csv(file, result);
  if (!file) throw IoError("failed writing '" + spec.output_path + "'");
}

OptimizeMode parse_optimize_mode(const std::string& s) {
  if (s == "qd") return OptimizeMode::qd;
  if (s == "jc") return OptimizeMode::jc;
  throw ValidationError("optimize mode must be qd or jc, got '" + s + "'");
}

OptimizeReport run_optimize(const NetworkConfig& cfg, OptimizeMode mode) {
  OptimizeReport rep;
  rep.mode = mode;
  if (mode == OptimizeMode::qd) {
    const DerivedIntensities d = derive_intensities(cfg);
    const ActivationOptimum opt =
        std::isinf(cfg.tau_dis) ? optimal_qd_full_d2d(cfg, d) : optimal_qd_sparse(cfg, d);
    const UtilityPoint grid = grid_search_qd(cfg, d, kGridStep);
    rep.method = std::isinf(cfg.tau_dis) ? "interior optimum sqrt(Q1 Q4 / (Q2 Q3))" : "sparse regime optimum";
    rep.closed_form = opt.q_d;
    rep.validator = grid.decision;
    rep.utility_closed = utility_underlaid(cfg, d, opt.q_d).u;
    rep.utility_validator = grid.u;
    rep.agree = std::abs(rep.closed_form - rep.validator) <= kGridStep * (1.0 + 1e-9);
    if (std::isinf(cfg.tau_dis)) {
      rep.details = {{"Q1", opt.q1}, {"Q2", opt.q2}, {"Q3", opt.q3}, {"Q4", opt.q4}};
    } else {
      rep.details = {{"rho_S(1) tau_dis^2", opt.regime_measure}};
    }
    rep.warnings = opt.warnings;
  } else {
    const CodebookOptimum opt = optimal_jc_dense(cfg);
    const UtilityPoint search = exhaustive_search_jc(cfg, true);
    const UtilityPoint exact = exhaustive_search_jc(cfg, false);
    rep.method = "dense-cellular codebook split round(J + Q6 - sqrt(Q6^2 + J Q6))";
    rep.closed_form = opt.j_c;
    rep.validator = search.decision;
    rep.utility_closed = utility_overlaid(cfg, opt.j_c, true).u;
    rep.utility_validator = search.u;
    rep.agree = opt.j_c == static_cast<int>(search.decision);
    rep.details = {{"Q6", opt.q6}, {"unclamped", opt.unclamped}, {"argmax without saturation", exact.decision}};
    rep.warnings = opt.warnings;
  }
  return rep;
}

void write_report(std::ostream& out, const OptimizeReport& r) {
  out << "mode: " << (r.mode == OptimizeMode::qd ? "qd" : "jc") << "\n";
  out << "method: " << r.method << "\n";
  out << "closed_form: " << format_real(r.closed_form) << "\n";
  out << "validator: " << format_real(r.validator) << "\n";
  out << "utility_closed: " << format_real(r.utility_closed) << "\n";
  out << "utility_validator: " << format_real(r.utility_validator) << "\n";
  out << "agree: " << (r.agree ? "yes" : "no") << "\n";
  for (const auto& [name, value] : r.details) out << name << ": " << format_real(value) << "\n";
  for (const auto& w : r.warnings) out << "warning: " << w << "\n";
}

}  // namespace scmad2d
