#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <vector>

#include "scmad2d/analytics.hpp"
#include "scmad2d/topology.hpp"

namespace scmad2d {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

/// xoshiro256** seeded through splitmix64. Satisfies UniformRandomBitGenerator.
class Xoshiro256 {
 public:
  using result_type = std::uint64_t;
  explicit Xoshiro256(std::uint64_t seed);
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()();

 private:
  std::uint64_t s_[4];
};

std::uint64_t splitmix64(std::uint64_t x);
/// Seed of the independent substream for trial `index` of a run seeded with `seed`.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index);

/// SIR sentinel for links without interferers; passes every threshold.
inline constexpr double kSirNoInterference = std::numeric_limits<double>::infinity();

/// One spatial realization on a square torus [-W, W)^2.
///
/// Cellular user 0 is the typical uplink user. The typical D2D link is held
/// apart from the D2D population: its receiver sits at the origin and its
/// transmitter at `typical_d2d_offset`. The two typical links are not part of
/// each other's interference field.
struct Snapshot {
  double window_halfwidth = 0.0;
  std::vector<Point> bs_points;
  std::vector<Point> cellular_user_points;  // uplink users plus cellular-mode D2D transmitters
  std::vector<Point> d2d_tx_points;         // D2D-mode transmitters
  std::vector<Point> d2d_rx_offsets;        // receiver minus transmitter
  std::vector<int> associations;            // cellular user -> BS index
  std::vector<int> cellular_resource;       // -1 when inactive
  std::vector<int> d2d_resource;            // -1 when inactive
  std::vector<std::uint8_t> cellular_active;
  std::vector<std::uint8_t> d2d_active;
  Point typical_d2d_offset;
  int typical_d2d_resource = -1;
  std::uint64_t rng_seed = 0;
  bool allocated = false;

  double area() const { return 4.0 * window_halfwidth * window_halfwidth; }
};

enum class FadingModel {
  exact,              // Exp(1) per OFDMA tone; Gamma(N_C, 1) summed over SCMA tones
  exponential_signal  // SCMA desired signal replaced by Exp with mean N_C
};

struct SimulationOptions {
  double window_halfwidth = 0.0;  // 0 selects 10 / sqrt(pi lambda_BS)
  unsigned workers = 0;           // 0 selects hardware concurrency
  FadingModel fading = FadingModel::exact;
};

/// Smallest admissible window half-width, 10 / sqrt(pi lambda_BS).
double minimum_window_halfwidth(const NetworkConfig& cfg);

/// Poisson point sets, Rayleigh D2D links with mode selection, and the two
/// typical links. Deterministic in (cfg, seed, window).
Snapshot sample_snapshot(const NetworkConfig& cfg, std::uint64_t seed, double window_halfwidth = 0.0);

/// Nearest-BS association and random resource allocation: per cell
/// min(N_U, N_R) users hold distinct resources, the typical user always among
/// them; each D2D pair is active with probability q_D and picks a resource
/// uniformly from its pool (shared in underlaid mode, the upper J - J_C
/// codebooks in overlaid mode).
Snapshot allocate_resources(Snapshot snapshot, const NetworkConfig& cfg);

/// Throws NumericError if an active cellular user lacks a resource, a cell
/// reuses a resource, or a cell exceeds its resource count.
void check_allocation(const Snapshot& snapshot, const NetworkConfig& cfg);

/// SIR of the typical uplink at its serving BS. Throws NumericError if the
/// snapshot has no BS.
double sir_typical_bs(const Snapshot& snapshot, const NetworkConfig& cfg, FadingModel fading = FadingModel::exact);

/// SIR of the typical D2D link at the origin.
double sir_typical_dr(const Snapshot& snapshot, const NetworkConfig& cfg, FadingModel fading = FadingModel::exact);

/// Length of the typical D2D link; success additionally requires it <= tau_dis.
double typical_d2d_length(const Snapshot& snapshot);

struct McEstimate {
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  double p_hat = 0.0;
  double ci_halfwidth = 0.0;  // 1.96 sqrt(p (1 - p) / n)
};

McEstimate make_estimate(std::uint64_t trials, std::uint64_t successes);

struct McResult {
  CoverageReport report;
  McEstimate cellular;
  McEstimate d2d;
  double active_cellular_density = 0.0;  // per m^2, typical user excluded
  double active_d2d_density = 0.0;
};

McResult run_monte_carlo(const NetworkConfig& cfg, std::uint64_t trials, std::uint64_t seed,
                         const SimulationOptions& options = {});

/// Coverage and ASE from `trials` independent snapshots. Bit-identical for
/// fixed (cfg, trials, seed, window) regardless of the worker count.
CoverageReport estimate_coverage(const NetworkConfig& cfg, std::uint64_t trials, std::uint64_t seed,
                                 const SimulationOptions& options = {});

/// Line-oriented dump, one point per line:
///   bs   x y -1 1
///   cell x y resource active
///   d2d  x y partner_dx partner_dy resource active
void write_snapshot(std::ostream& out, const Snapshot& snapshot);

}  // namespace scmad2d
