#include <cstdint>
#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "scmad2d/scmad2d.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitNumeric = 3;

int exit_code(scmad2d_status s) {
  switch (s) {
    case SCMAD2D_OK:
      return kExitOk;
    case SCMAD2D_NUMERIC:
      return kExitNumeric;
    default:
      return kExitValidation;
  }
}

struct Failure {
  scmad2d_status status;
};

void check(scmad2d_status s) {
  if (s != SCMAD2D_OK) throw Failure{s};
}

class Config {
 public:
  Config() { check(scmad2d_config_new(&handle_)); }
  ~Config() { scmad2d_config_free(handle_); }
  Config(const Config&) = delete;
  Config& operator=(const Config&) = delete;
  scmad2d_config* get() const { return handle_; }

 private:
  scmad2d_config* handle_ = nullptr;
};

class Sweep {
 public:
  explicit Sweep(const std::string& scenario) { check(scmad2d_sweep_new(scenario.c_str(), &handle_)); }
  ~Sweep() { scmad2d_sweep_free(handle_); }
  Sweep(const Sweep&) = delete;
  Sweep& operator=(const Sweep&) = delete;
  scmad2d_sweep* get() const { return handle_; }

 private:
  scmad2d_sweep* handle_ = nullptr;
};

void print_report(const char* engine, const scmad2d_report& r) {
  std::printf("engine: %s\n", engine);
  std::printf("cp_cell: %.17g\ncp_d2d: %.17g\n", r.cp_cellular, r.cp_d2d);
  std::printf("ase_cell: %.17g\nase_d2d: %.17g\nase_total: %.17g\n", r.ase_cellular, r.ase_d2d, r.ase_total);
  if (r.monte_carlo) {
    std::printf("ci_cell: %.17g\nci_d2d: %.17g\n", r.ci_cellular, r.ci_d2d);
    std::printf("active_cellular_density: %.17g\nactive_d2d_density: %.17g\n", r.active_cellular_density,
                r.active_d2d_density);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SCMA/OFDMA D2D hybrid network analysis and simulation"};
  app.set_version_flag("--version", std::string(scmad2d_version()));

  std::string config_path;
  std::string scenario;
  std::string sweep_range;
  std::string engines = "analytic";
  std::uint64_t trials = 10000;
  std::uint64_t seed = 1;
  unsigned workers = 0;
  std::string out_path = "-";
  std::string optimize_mode;
  bool dump_snapshot = false;

  app.add_option("--config", config_path, "key = value parameter file")->check(CLI::ExistingFile);
  app.add_option("--scenario", scenario, "fig3a, fig3b, fig4, fig5, fig6a, fig6b, fig7a, fig7b or custom");
  app.add_option("--sweep", sweep_range, "KEY=start:stop:steps");
  app.add_option("--engines", engines, "comma-separated: analytic, mc")->capture_default_str();
  app.add_option("--trials", trials, "Monte Carlo trials per point")->capture_default_str();
  app.add_option("--seed", seed, "Monte Carlo seed")->capture_default_str();
  app.add_option("--workers", workers, "worker threads, 0 = all cores")->capture_default_str();
  app.add_option("--out", out_path, "output path, - for stdout")->capture_default_str();
  app.add_option("--optimize", optimize_mode, "qd or jc: closed-form optimum with its validator")
      ->check(CLI::IsMember({"qd", "jc"}));
  app.add_flag("--snapshot", dump_snapshot, "dump one allocated snapshot (seed from --seed)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (!scenario.empty() || !sweep_range.empty()) {
      Sweep sweep(scenario.empty() ? "custom" : scenario);
      if (!config_path.empty()) check(scmad2d_sweep_load_config(sweep.get(), config_path.c_str()));
      if (!sweep_range.empty()) check(scmad2d_sweep_set_range(sweep.get(), sweep_range.c_str()));
      check(scmad2d_sweep_set_engines(sweep.get(), engines.c_str()));
      check(scmad2d_sweep_set_trials(sweep.get(), trials));
      check(scmad2d_sweep_set_seed(sweep.get(), seed));
      check(scmad2d_sweep_set_workers(sweep.get(), workers));
      if (optimize_mode.empty() && !dump_snapshot) {
        check(scmad2d_sweep_run(sweep.get(), out_path.c_str()));
        std::size_t rows = 0;
        std::size_t errors = 0;
        check(scmad2d_sweep_row_count(sweep.get(), &rows));
        check(scmad2d_sweep_error_count(sweep.get(), &errors));
        if (errors > 0) std::fprintf(stderr, "%zu of %zu rows carry an error\n", errors, rows);
        return kExitOk;
      }
    }

    Config cfg;
    if (!scenario.empty()) check(scmad2d_config_from_scenario(cfg.get(), scenario.c_str()));
    if (!config_path.empty()) check(scmad2d_config_load(cfg.get(), config_path.c_str()));
    check(scmad2d_config_validate(cfg.get()));

    if (!optimize_mode.empty()) {
      scmad2d_optimum opt{};
      char* text = nullptr;
      check(scmad2d_optimize(cfg.get(), optimize_mode.c_str(), &opt, &text));
      std::fputs(text, stdout);
      scmad2d_string_free(text);
      return kExitOk;
    }
    if (dump_snapshot) {
      check(scmad2d_snapshot_dump(cfg.get(), seed, out_path.c_str()));
      return kExitOk;
    }

    bool first = true;
    std::string list = engines + ",";
    for (std::size_t pos = 0, next; (next = list.find(',', pos)) != std::string::npos; pos = next + 1) {
      const std::string engine = list.substr(pos, next - pos);
      if (engine.empty()) continue;
      if (!first) std::printf("\n");
      first = false;
      scmad2d_report r{};
      if (engine == "analytic") {
        check(scmad2d_evaluate_analytic(cfg.get(), &r));
      } else if (engine == "mc" || engine == "monte_carlo") {
        check(scmad2d_estimate_coverage(cfg.get(), trials, seed, workers, &r));
      } else {
        std::fprintf(stderr, "error: unknown engine '%s'\n", engine.c_str());
        return kExitValidation;
      }
      print_report(engine.c_str(), r);
    }
    return kExitOk;
  } catch (const Failure& f) {
    std::fprintf(stderr, "error: %s\n", scmad2d_last_error());
    return exit_code(f.status);
  }
}
