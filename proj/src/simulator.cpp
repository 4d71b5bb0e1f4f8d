#include "scmad2d/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include "scmad2d/error.hpp"

namespace scmad2d {

namespace {

constexpr double kPi = std::numbers::pi;

// Substream tags so that geometry, allocation and the two fade draws never share a stream.
constexpr std::uint64_t kAllocationTag = 0xa0761d6478bd642fULL;
constexpr std::uint64_t kCellularFadeTag = 0xe7037ed1a0b428dbULL;
constexpr std::uint64_t kD2dFadeTag = 0x8ebc6af09c88c6e3ULL;

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

struct Torus {
  double half;
  double side;

  explicit Torus(double halfwidth) : half(halfwidth), side(2.0 * halfwidth) {}

  double wrap(double d) const {
    if (d >= half) return d - side;
    if (d < -half) return d + side;
    return d;
  }

  double dist2(const Point& a, const Point& b) const {
    const double dx = wrap(a.x - b.x);
    const double dy = wrap(a.y - b.y);
    return dx * dx + dy * dy;
  }
};

// Uniform bucket grid over the torus for nearest-BS queries.
class BsGrid {
 public:
  BsGrid(const std::vector<Point>& bs, const Torus& torus, double lambda_bs) : bs_(bs), torus_(torus) {
    const double target = 1.0 / std::sqrt(lambda_bs);
    n_ = std::max(1, static_cast<int>(torus.side / target));
    cell_ = torus.side / n_;
    start_.assign(static_cast<std::size_t>(n_) * n_ + 1, 0);
    std::vector<int> bucket(bs.size());
    for (std::size_t i = 0; i < bs.size(); ++i) {
      bucket[i] = index(bs[i]);
      ++start_[bucket[i] + 1];
    }
    for (std::size_t c = 1; c < start_.size(); ++c) start_[c] += start_[c - 1];
    items_.resize(bs.size());
    std::vector<int> fill(start_.begin(), start_.end() - 1);
    for (std::size_t i = 0; i < bs.size(); ++i) items_[fill[bucket[i]]++] = static_cast<int>(i);
  }

  int nearest(const Point& p) const {
    const int cx = coord(p.x);
    const int cy = coord(p.y);
    int best = -1;
    double best_d2 = std::numeric_limits<double>::infinity();
    auto scan = [&](int gx, int gy) {
      const int c = wrap(gx) + n_ * wrap(gy);
      for (int k = start_[c]; k < start_[c + 1]; ++k) {
        const int b = items_[k];
        const double d2 = torus_.dist2(p, bs_[b]);
        if (d2 < best_d2 || (d2 == best_d2 && b < best)) {
          best_d2 = d2;
          best = b;
        }
      }
    };
    scan(cx, cy);
    for (int ring = 1; ring <= n_; ++ring) {
      // Cells beyond ring - 1 lie at least (ring - 1) cell widths away.
      const double reach = (ring - 1) * cell_;
      if (best >= 0 && best_d2 <= reach * reach) break;
      for (int d = -ring; d <= ring; ++d) {
        scan(cx + d, cy - ring);
        scan(cx + d, cy + ring);
      }
      for (int d = -ring + 1; d <= ring - 1; ++d) {
        scan(cx - ring, cy + d);
        scan(cx + ring, cy + d);
      }
      if (2 * ring + 1 >= n_ && best >= 0) break;
    }
    return best;
  }

 private:
  int coord(double v) const {
    const int c = static_cast<int>(std::floor((v + torus_.half) / cell_));
    return std::clamp(c, 0, n_ - 1);
  }
  int wrap(int c) const {
    if (c < 0) return c + n_ * ((-c + n_ - 1) / n_);
    if (c >= n_) return c % n_;
    return c;
  }
  int index(const Point& p) const { return coord(p.x) + n_ * coord(p.y); }

  const std::vector<Point>& bs_;
  Torus torus_;
  int n_ = 1;
  double cell_ = 1.0;
  std::vector<int> start_;
  std::vector<int> items_;
};

Point uniform_point(Xoshiro256& rng, double half) {
  std::uniform_real_distribution<double> u(-half, half);
  const double x = u(rng);
  return {x, u(rng)};
}

void scatter(std::vector<Point>& out, Xoshiro256& rng, double intensity, double half) {
  const double mean = intensity * 4.0 * half * half;
  if (!(mean > 0.0)) return;
  std::poisson_distribution<long> count(mean);
  const long n = count(rng);
  out.reserve(out.size() + static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) out.push_back(uniform_point(rng, half));
}

// Rayleigh link length with P(r <= t) = 1 - exp(-pi xi t^2), isotropic direction.
Point rayleigh_offset(Xoshiro256& rng, double xi) {
  std::exponential_distribution<double> e(kPi * xi);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  const double r = std::sqrt(e(rng));
  const double th = angle(rng);
  return {r * std::cos(th), r * std::sin(th)};
}

struct ResourcePools {
  int cellular = 1;
  int d2d = 1;
  int d2d_offset = 0;
};

ResourcePools pools(const NetworkConfig& cfg) {
  ResourcePools p;
  p.cellular = cfg.cellular_resources();
  p.d2d = cfg.d2d_resources();
  p.d2d_offset = cfg.coexistence == Coexistence::overlaid ? cfg.j_cell : 0;
  return p;
}

class Fader {
 public:
  Fader(const NetworkConfig& cfg, std::uint64_t seed, FadingModel model)
      : rng_(seed), scma_(cfg.access_scheme == AccessScheme::scma), n_c_(cfg.n_c), model_(model) {}

  double signal() {
    if (!scma_) return std::exponential_distribution<double>(1.0)(rng_);
    if (model_ == FadingModel::exponential_signal)
      return std::exponential_distribution<double>(1.0 / n_c_)(rng_);
    return std::gamma_distribution<double>(n_c_, 1.0)(rng_);
  }

  double interferer() {
    if (!scma_) return std::exponential_distribution<double>(1.0)(rng_);
    return std::gamma_distribution<double>(n_c_, 1.0)(rng_);
  }

  double power_share() const { return scma_ ? 1.0 / n_c_ : 1.0; }

 private:
  Xoshiro256 rng_;
  bool scma_;
  double n_c_;
  FadingModel model_;
};

double path_gain(double d2, double alpha) { return std::pow(d2, -0.5 * alpha); }

void require_allocated(const Snapshot& s, const char* who) {
  if (!s.allocated) throw ValidationError(std::string(who) + ": snapshot has no resource allocation");
}

double finish_sir(double signal, double interference) {
  if (interference <= 0.0) return kSirNoInterference;
  return signal / interference;
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

Xoshiro256::Xoshiro256(std::uint64_t seed) {
  std::uint64_t x = seed;
  for (auto& s : s_) {
    x += 0x9e3779b97f4a7c15ULL;
    s = splitmix64(x);
  }
}

Xoshiro256::result_type Xoshiro256::operator()() {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double minimum_window_halfwidth(const NetworkConfig& cfg) { return 10.0 / std::sqrt(kPi * cfg.lambda_bs); }

Snapshot sample_snapshot(const NetworkConfig& cfg, std::uint64_t seed, double window_halfwidth) {
  cfg.validate();
  const double minimum = minimum_window_halfwidth(cfg);
  if (window_halfwidth == 0.0) window_halfwidth = minimum;
  if (!(window_halfwidth >= minimum * (1.0 - 1e-12))) {
    std::ostringstream msg;
    msg << "window half-width " << window_halfwidth << " below 10/sqrt(pi lambda_BS) = " << minimum;
    throw ValidationError(msg.str());
  }

  Snapshot s;
  s.window_halfwidth = window_halfwidth;
  s.rng_seed = seed;
  Xoshiro256 rng(seed);
  const double half = window_halfwidth;

  scatter(s.bs_points, rng, cfg.lambda_bs, half);

  // Typical uplink user, uniform in a disc of the mean cell radius around the centre.
  {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double radius = 1.0 / std::sqrt(kPi * cfg.lambda_bs);
    const double r = radius * std::sqrt(u(rng));
    const double th = 2.0 * kPi * u(rng);
    s.cellular_user_points.push_back({r * std::cos(th), r * std::sin(th)});
  }
  scatter(s.cellular_user_points, rng, cfg.lambda_u, half);

  std::vector<Point> d2d;
  scatter(d2d, rng, cfg.lambda_d, half);
  const double tau2 = cfg.tau_dis * cfg.tau_dis;
  for (const Point& tx : d2d) {
    const Point off = rayleigh_offset(rng, cfg.xi);
    if (off.x * off.x + off.y * off.y <= tau2) {
      s.d2d_tx_points.push_back(tx);
      s.d2d_rx_offsets.push_back(off);
    } else {
      s.cellular_user_points.push_back(tx);
    }
  }

  const Point probe = rayleigh_offset(rng, cfg.xi);
  s.typical_d2d_offset = probe;
  return s;
}

Snapshot allocate_resources(Snapshot s, const NetworkConfig& cfg) {
  cfg.validate();
  const Torus torus(s.window_halfwidth);
  const ResourcePools pool = pools(cfg);
  Xoshiro256 rng(s.rng_seed ^ kAllocationTag);

  const std::size_t n_users = s.cellular_user_points.size();
  s.associations.assign(n_users, -1);
  s.cellular_resource.assign(n_users, -1);
  s.cellular_active.assign(n_users, 0);

  if (!s.bs_points.empty()) {
    const BsGrid grid(s.bs_points, torus, cfg.lambda_bs);
    for (std::size_t i = 0; i < n_users; ++i) s.associations[i] = grid.nearest(s.cellular_user_points[i]);

    // Users grouped by serving BS in index order.
    const std::size_t n_bs = s.bs_points.size();
    std::vector<int> start(n_bs + 1, 0);
    for (int b : s.associations) ++start[b + 1];
    for (std::size_t b = 1; b <= n_bs; ++b) start[b] += start[b - 1];
    std::vector<int> members(n_users);
    std::vector<int> fill(start.begin(), start.end() - 1);
    for (std::size_t i = 0; i < n_users; ++i) members[fill[s.associations[i]]++] = static_cast<int>(i);

    std::vector<int> resources(pool.cellular);
    for (std::size_t b = 0; b < n_bs; ++b) {
      const auto first = members.begin() + start[b];
      const auto last = members.begin() + start[b + 1];
      const int n = static_cast<int>(last - first);
      if (n == 0) continue;
      const int k = std::min(n, pool.cellular);
      // The typical user (index 0) is always first in its cell and kept active.
      const int fixed = *first == 0 ? 1 : 0;
      for (int i = fixed; i < k; ++i) {
        std::uniform_int_distribution<int> pick(i, n - 1);
        std::swap(first[i], first[pick(rng)]);
      }
      for (int r = 0; r < pool.cellular; ++r) resources[r] = r;
      for (int i = 0; i < k; ++i) {
        std::uniform_int_distribution<int> pick(i, pool.cellular - 1);
        std::swap(resources[i], resources[pick(rng)]);
        s.cellular_active[first[i]] = 1;
        s.cellular_resource[first[i]] = resources[i];
      }
    }
  }

  const std::size_t n_d2d = s.d2d_tx_points.size();
  s.d2d_resource.assign(n_d2d, -1);
  s.d2d_active.assign(n_d2d, 0);
  std::bernoulli_distribution coin(cfg.q_d);
  std::uniform_int_distribution<int> pick(0, pool.d2d - 1);
  for (std::size_t i = 0; i < n_d2d; ++i) {
    if (!coin(rng)) continue;
    s.d2d_active[i] = 1;
    s.d2d_resource[i] = pool.d2d_offset + pick(rng);
  }
  s.typical_d2d_resource = pool.d2d_offset + pick(rng);
  s.allocated = true;
  return s;
}

void check_allocation(const Snapshot& s, const NetworkConfig& cfg) {
  require_allocated(s, "check_allocation");
  const ResourcePools pool = pools(cfg);
  std::vector<std::vector<int>> used(s.bs_points.size());
  for (std::size_t i = 0; i < s.cellular_user_points.size(); ++i) {
    if (!s.cellular_active[i]) continue;
    const int r = s.cellular_resource[i];
    if (r < 0 || r >= pool.cellular) throw NumericError("active cellular user without a valid resource");
    used[s.associations[i]].push_back(r);
  }
  for (auto& cell : used) {
    if (static_cast<int>(cell.size()) > pool.cellular) throw NumericError("cell exceeds its resource count");
    std::sort(cell.begin(), cell.end());
    if (std::adjacent_find(cell.begin(), cell.end()) != cell.end())
      throw NumericError("resource reused within a cell");
  }
}

double sir_typical_bs(const Snapshot& s, const NetworkConfig& cfg, FadingModel fading) {
  require_allocated(s, "sir_typical_bs");
  if (s.bs_points.empty() || s.associations.empty() || s.associations[0] < 0)
    throw NumericError("degenerate snapshot: no BS to serve the typical user");
  const Torus torus(s.window_halfwidth);
  const Point& bs = s.bs_points[s.associations[0]];
  const int res = s.cellular_resource[0];
  Fader fade(cfg, s.rng_seed ^ kCellularFadeTag, fading);

  const double share = fade.power_share();
  const double signal = cfg.p_u * share * fade.signal() * path_gain(torus.dist2(s.cellular_user_points[0], bs), cfg.alpha);
  double interference = 0.0;
  for (std::size_t i = 1; i < s.cellular_user_points.size(); ++i) {
    if (!s.cellular_active[i] || s.cellular_resource[i] != res) continue;
    interference += cfg.p_u * share * fade.interferer() * path_gain(torus.dist2(s.cellular_user_points[i], bs), cfg.alpha);
  }
  for (std::size_t i = 0; i < s.d2d_tx_points.size(); ++i) {
    if (!s.d2d_active[i] || s.d2d_resource[i] != res) continue;
    interference += cfg.p_d * share * fade.interferer() * path_gain(torus.dist2(s.d2d_tx_points[i], bs), cfg.alpha);
  }
  return finish_sir(signal, interference);
}

double sir_typical_dr(const Snapshot& s, const NetworkConfig& cfg, FadingModel fading) {
  require_allocated(s, "sir_typical_dr");
  const Torus torus(s.window_halfwidth);
  const Point rx{0.0, 0.0};
  const int res = s.typical_d2d_resource;
  Fader fade(cfg, s.rng_seed ^ kD2dFadeTag, fading);

  const double share = fade.power_share();
  const Point& off = s.typical_d2d_offset;
  const double signal = cfg.p_d * share * fade.signal() * path_gain(off.x * off.x + off.y * off.y, cfg.alpha);
  double interference = 0.0;
  for (std::size_t i = 1; i < s.cellular_user_points.size(); ++i) {
    if (!s.cellular_active[i] || s.cellular_resource[i] != res) continue;
    interference += cfg.p_u * share * fade.interferer() * path_gain(torus.dist2(s.cellular_user_points[i], rx), cfg.alpha);
  }
  for (std::size_t i = 0; i < s.d2d_tx_points.size(); ++i) {
    if (!s.d2d_active[i] || s.d2d_resource[i] != res) continue;
    interference += cfg.p_d * share * fade.interferer() * path_gain(torus.dist2(s.d2d_tx_points[i], rx), cfg.alpha);
  }
  return finish_sir(signal, interference);
}

double typical_d2d_length(const Snapshot& s) { return std::hypot(s.typical_d2d_offset.x, s.typical_d2d_offset.y); }

McEstimate make_estimate(std::uint64_t trials, std::uint64_t successes) {
  if (trials == 0) throw ValidationError("estimate needs at least one trial");
  if (successes > trials) throw ValidationError("successes exceed trials");
  McEstimate e;
  e.trials = trials;
  e.successes = successes;
  e.p_hat = static_cast<double>(successes) / static_cast<double>(trials);
  e.ci_halfwidth = 1.96 * std::sqrt(e.p_hat * (1.0 - e.p_hat) / static_cast<double>(trials));
  return e;
}

McResult run_monte_carlo(const NetworkConfig& cfg, std::uint64_t trials, std::uint64_t seed,
                         const SimulationOptions& options) {
  cfg.validate();
  if (trials == 0) throw ValidationError("trials must be at least 1");
  const double half = options.window_halfwidth == 0.0 ? minimum_window_halfwidth(cfg) : options.window_halfwidth;
  unsigned workers = options.workers != 0 ? options.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, trials));

  struct Tally {
    std::uint64_t cellular = 0;
    std::uint64_t d2d = 0;
    std::uint64_t active_cellular = 0;
    std::uint64_t active_d2d = 0;
  };
  std::vector<Tally> tallies(workers);
  std::vector<std::exception_ptr> errors(workers);

  auto work = [&](unsigned w) {
    try {
      Tally& t = tallies[w];
      for (std::uint64_t i = w; i < trials; i += workers) {
        const Snapshot s = allocate_resources(sample_snapshot(cfg, substream_seed(seed, i), half), cfg);
        if (sir_typical_bs(s, cfg, options.fading) > cfg.tau_bs) ++t.cellular;
        if (typical_d2d_length(s) <= cfg.tau_dis && sir_typical_dr(s, cfg, options.fading) > cfg.tau_dr) ++t.d2d;
        t.active_cellular += static_cast<std::uint64_t>(std::count(s.cellular_active.begin() + 1, s.cellular_active.end(), 1));
        t.active_d2d += static_cast<std::uint64_t>(std::count(s.d2d_active.begin(), s.d2d_active.end(), 1));
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  Tally total;
  for (const Tally& t : tallies) {
    total.cellular += t.cellular;
    total.d2d += t.d2d;
    total.active_cellular += t.active_cellular;
    total.active_d2d += t.active_d2d;
  }

  McResult out;
  out.cellular = make_estimate(trials, total.cellular);
  out.d2d = make_estimate(trials, total.d2d);
  const double exposure = static_cast<double>(trials) * 4.0 * half * half;
  out.active_cellular_density = static_cast<double>(total.active_cellular) / exposure;
  out.active_d2d_density = static_cast<double>(total.active_d2d) / exposure;

  CoverageReport& r = out.report;
  r.provenance = Provenance::monte_carlo;
  r.cp_cellular = out.cellular.p_hat;
  r.cp_d2d = out.d2d.p_hat;
  r.ase_cellular = out.active_cellular_density * r.cp_cellular * std::log1p(cfg.tau_bs);
  r.ase_d2d = out.active_d2d_density * r.cp_d2d * std::log1p(cfg.tau_dr);
  r.ase_total = r.ase_cellular + r.ase_d2d;
  r.ci_cellular = out.cellular.ci_halfwidth;
  r.ci_d2d = out.d2d.ci_halfwidth;
  r.ci_halfwidth = std::max(r.ci_cellular, r.ci_d2d);
  return out;
}

CoverageReport estimate_coverage(const NetworkConfig& cfg, std::uint64_t trials, std::uint64_t seed,
                                 const SimulationOptions& options) {
  return run_monte_carlo(cfg, trials, seed, options).report;
}

void write_snapshot(std::ostream& out, const Snapshot& s) {
  out.precision(17);
  out << "# window_halfwidth " << s.window_halfwidth << "\n";
  out << "# tier x y [partner_dx partner_dy] resource active\n";
  for (const Point& p : s.bs_points) out << "bs " << p.x << ' ' << p.y << " -1 1\n";
  for (std::size_t i = 0; i < s.cellular_user_points.size(); ++i) {
    const Point& p = s.cellular_user_points[i];
    const int res = i < s.cellular_resource.size() ? s.cellular_resource[i] : -1;
    const int act = i < s.cellular_active.size() ? s.cellular_active[i] : 0;
    out << (i == 0 ? "cell0 " : "cell ") << p.x << ' ' << p.y << ' ' << res << ' ' << act << "\n";
  }
  for (std::size_t i = 0; i < s.d2d_tx_points.size(); ++i) {
    const Point& p = s.d2d_tx_points[i];
    const Point& o = s.d2d_rx_offsets[i];
    const int res = i < s.d2d_resource.size() ? s.d2d_resource[i] : -1;
    const int act = i < s.d2d_active.size() ? s.d2d_active[i] : 0;
    out << "d2d " << p.x << ' ' << p.y << ' ' << o.x << ' ' << o.y << ' ' << res << ' ' << act << "\n";
  }
  const Point& o = s.typical_d2d_offset;
  out << "d2d0 " << o.x << ' ' << o.y << ' ' << -o.x << ' ' << -o.y << ' ' << s.typical_d2d_resource << " 1\n";
}

}  // namespace scmad2d
