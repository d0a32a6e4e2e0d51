#pragma once

// Metropolis dynamics on height functions for the measure
//   pi(h) ~ exp(beta * logweight(h) + theta * volume(h)),
// with single-vertex flips proposed uniformly at interior vertices.

#include <cstdint>
#include <array>
#include <functional>
#include <iosfwd>
#include <vector>

#include "skewtab/nhlf.hpp"
#include "skewtab/rng.hpp"

namespace skewtab {

struct ChainState {
  HeightFunction h;
  double logw = 0.0;
  std::uint64_t seed = 0;
  std::uint64_t steps = 0;
};

class Chain {
 public:
  Chain(HeightFunction start, WeightField w, std::uint64_t seed);

  /// One Metropolis step; returns true if a flip was applied.
  bool step();
  void run(std::uint64_t steps);

  /// log pi(after) - log pi(before) for moving vertex p by dir.
  [[nodiscard]] double log_ratio(Vertex p, int dir) const;
  /// log P(current -> flip of p by dir); -inf when that flip is illegal.
  [[nodiscard]] double log_transition(Vertex p, int dir) const;

  /// Inverse temperature on the log-weight and tilt on the volume sum(h).
  void set_beta(double beta) { beta_ = beta; }
  void set_theta(double theta) { theta_ = theta; }
  [[nodiscard]] double beta() const { return beta_; }
  [[nodiscard]] double theta() const { return theta_; }

  [[nodiscard]] const ChainState& state() const { return state_; }
  [[nodiscard]] const HeightFunction& heights() const { return state_.h; }
  [[nodiscard]] double log_weight() const { return state_.logw; }
  /// sum of heights minus its value at the starting configuration.
  [[nodiscard]] long long volume() const { return volume_; }
  /// Recomputes the cached log-weight and returns the drift that was removed.
  double revalidate();

 private:
  ChainState state_;
  WeightField w_;
  SplitMix64 rng_;
  const std::vector<Vertex>* interior_;
  double beta_ = 1.0;
  double theta_ = 0.0;
  long long volume_ = 0;
};

/// Default burn-in of 20 |V|^2 steps.
std::uint64_t default_burn_in(const Region& region);

/// Starting configuration: the lowest extension of the skew boundary.
HeightFunction initial_heights(const SkewRegion& sr);

/// Runs a chain and calls `visit` on every thinned sample.
void run_samples(const SkewShape& shape, const WeightField& w, std::uint64_t burn_in, std::uint64_t n_samples,
                 std::uint64_t thin, std::uint64_t seed, const std::function<void(const HeightFunction&)>& visit);

std::vector<Tiling> sample(const SkewShape& shape, const WeightField& w, std::uint64_t burn_in,
                           std::uint64_t n_samples, std::uint64_t thin, std::uint64_t seed);

/// Per-A-triangle frequencies of the type of the covering lozenge.
class DensityField {
 public:
  explicit DensityField(std::shared_ptr<const Region> region);

  void add(const Tiling& t);
  void add(const HeightFunction& h) { add(heights_to_tiling(h)); }
  void merge(const DensityField& other);

  [[nodiscard]] std::uint64_t samples() const { return n_; }
  /// Frequency of lozenge type (1..3) covering the A triangle at `anchor`.
  [[nodiscard]] double freq(Vertex anchor, int type) const;
  [[nodiscard]] const Region& region() const { return *region_; }
  /// Anchors of all A triangles in row-major order.
  [[nodiscard]] const std::vector<Vertex>& anchors() const { return anchors_; }

  /// CSV with columns x,y,freq_type1,freq_type2,freq_type3,n.
  void write_csv(std::ostream& os) const;

 private:
  std::shared_ptr<const Region> region_;
  std::vector<Vertex> anchors_;
  std::vector<std::array<std::uint64_t, 3>> counts_;  // indexed by box index
  std::uint64_t n_ = 0;
};

DensityField density(const std::vector<Tiling>& samples, std::shared_ptr<const Region> region);

struct Estimate {
  double value = 0.0;
  double std_error = 0.0;
};

struct AisConfig {
  /// Inverse temperatures on the weight field; must rise from 0 to 1.
  std::vector<double> schedule{0.0, 1.0};
  /// Metropolis steps after each level change.
  std::uint64_t steps_per_level = 200;
  /// Levels of the volume ladder that estimates log |H|.
  int volume_levels = 200;
  /// Volume tilt of the frozen reference.
  double theta0 = -20.0;
  int particles = 64;
  std::uint64_t seed = 1;
  int threads = 1;
};

/// Annealed importance sampling estimate of log Z(shape, w) with a jackknife
/// standard error. The chain starts frozen at the lowest height function
/// under a strong volume tilt, anneals the tilt to 0 (uniform measure), then
/// anneals beta from 0 to 1.
Estimate estimate_logZ(const SkewShape& shape, const WeightField& w, const AisConfig& config);

/// Jackknife standard error of log(mean(exp(x))).
Estimate log_mean_exp(const std::vector<double>& x);

}  // namespace skewtab
