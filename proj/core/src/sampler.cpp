#include "skewtab/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <thread>

namespace skewtab {

Chain::Chain(HeightFunction start, WeightField w, std::uint64_t seed)
    : w_(std::move(w)), rng_(seed), interior_(&start.region().interior_vertices()) {
  state_.h = std::move(start);
  state_.seed = seed;
  state_.logw = tiling_weight(state_.h, w_);
}

bool Chain::step() {
  ++state_.steps;
  const auto& inner = *interior_;
  if (inner.empty()) return false;
  const Vertex p = inner[rng_.below(inner.size())];
  const int dir = flip_direction(state_.h, p);
  if (dir == 0) return false;
  const double dw = w_.kind() == WeightField::Kind::Uniform ? 0.0 : flip_delta(p, dir, w_);
  const double lr = beta_ * dw + theta_ * dir;
  if (lr < 0.0 && rng_.uniform() >= std::exp(lr)) return false;
  state_.h.set(p, state_.h.at(p) + dir);
  state_.logw += dw;
  volume_ += dir;
  return true;
}

double Chain::log_ratio(Vertex p, int dir) const {
  const double dw = w_.kind() == WeightField::Kind::Uniform ? 0.0 : flip_delta(p, dir, w_);
  return beta_ * dw + theta_ * dir;
}

double Chain::log_transition(Vertex p, int dir) const {
  if (dir == 0 || flip_direction(state_.h, p) != dir) return -std::numeric_limits<double>::infinity();
  return std::min(0.0, log_ratio(p, dir)) - std::log(static_cast<double>(interior_->size()));
}

void Chain::run(std::uint64_t steps) {
  for (std::uint64_t s = 0; s < steps; ++s) step();
}

double Chain::revalidate() {
  const double fresh = tiling_weight(state_.h, w_);
  const double drift = state_.logw - fresh;
  state_.logw = fresh;
  return drift;
}

std::uint64_t default_burn_in(const Region& region) {
  const auto v = static_cast<std::uint64_t>(region.vertices().size());
  return 20 * v * v;
}

HeightFunction initial_heights(const SkewRegion& sr) {
  const auto boundary = skew_boundary(sr);
  return extend_lower(boundary, sr.region());
}

void run_samples(const SkewShape& shape, const WeightField& w, std::uint64_t burn_in, std::uint64_t n_samples,
                 std::uint64_t thin, std::uint64_t seed, const std::function<void(const HeightFunction&)>& visit) {
  if (n_samples == 0) return;
  SkewRegion sr(shape);
  Chain chain(initial_heights(sr), w, seed);
  chain.run(burn_in);
  for (std::uint64_t i = 0; i < n_samples; ++i) {
    if (i > 0) chain.run(std::max<std::uint64_t>(thin, 1));
    visit(chain.heights());
  }
}

std::vector<Tiling> sample(const SkewShape& shape, const WeightField& w, std::uint64_t burn_in,
                           std::uint64_t n_samples, std::uint64_t thin, std::uint64_t seed) {
  std::vector<Tiling> out;
  out.reserve(n_samples);
  run_samples(shape, w, burn_in, n_samples, thin, seed,
              [&](const HeightFunction& h) { out.push_back(heights_to_tiling(h)); });
  return out;
}

// ---------------------------------------------------------------------------

DensityField::DensityField(std::shared_ptr<const Region> region)
    : region_(std::move(region)), counts_(region_->box_size(), {0, 0, 0}) {
  for (Vertex p : region_->vertices()) {
    if (region_->has_a(p)) anchors_.push_back(p);
  }
}

void DensityField::add(const Tiling& t) {
  for (const Lozenge& z : t) {
    if (!region_->has_a(z.anchor)) throw InvalidArgument("tiling does not match the density region");
    counts_[region_->index(z.anchor)][static_cast<std::size_t>(z.type - 1)]++;
  }
  ++n_;
}

void DensityField::merge(const DensityField& other) {
  if (other.region_->vertices() != region_->vertices()) throw InvalidArgument("density regions differ");
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    for (std::size_t t = 0; t < 3; ++t) counts_[i][t] += other.counts_[i][t];
  }
  n_ += other.n_;
}

double DensityField::freq(Vertex anchor, int type) const {
  if (!region_->has_a(anchor) || type < 1 || type > 3) throw OutOfDomain("no such triangle or type");
  if (n_ == 0) return 0.0;
  return static_cast<double>(counts_[region_->index(anchor)][static_cast<std::size_t>(type - 1)]) /
         static_cast<double>(n_);
}

void DensityField::write_csv(std::ostream& os) const {
  os << "x,y,freq_type1,freq_type2,freq_type3,n\n";
  const auto old = os.precision(12);
  for (Vertex p : anchors_) {
    os << p.u << ',' << p.v << ',' << freq(p, 1) << ',' << freq(p, 2) << ',' << freq(p, 3) << ',' << n_ << '\n';
  }
  os.precision(old);
}

DensityField density(const std::vector<Tiling>& samples, std::shared_ptr<const Region> region) {
  if (samples.empty()) throw InvalidArgument("density needs at least one sample");
  DensityField d(std::move(region));
  for (const auto& t : samples) d.add(t);
  return d;
}

// ---------------------------------------------------------------------------

Estimate log_mean_exp(const std::vector<double>& x) {
  const std::size_t m = x.size();
  if (m == 0) throw InvalidArgument("log_mean_exp of an empty sample");
  const double top = *std::max_element(x.begin(), x.end());
  double total = 0.0;
  for (double v : x) total += std::exp(v - top);
  Estimate e;
  e.value = top + std::log(total / static_cast<double>(m));
  if (m < 2) return e;
  std::vector<double> loo(m);
  double mean = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double rest = std::max(total - std::exp(x[i] - top), 1e-300);
    loo[i] = top + std::log(rest / static_cast<double>(m - 1));
    mean += loo[i];
  }
  mean /= static_cast<double>(m);
  double ss = 0.0;
  for (double v : loo) ss += (v - mean) * (v - mean);
  e.std_error = std::sqrt(ss * static_cast<double>(m - 1) / static_cast<double>(m));
  return e;
}

Estimate estimate_logZ(const SkewShape& shape, const WeightField& w, const AisConfig& cfg) {
  const auto& beta = cfg.schedule;
  if (beta.size() < 2 || beta.front() != 0.0 || beta.back() != 1.0) {
    throw InvalidArgument("schedule must start at 0 and end at 1");
  }
  for (std::size_t i = 1; i < beta.size(); ++i) {
    if (!(beta[i] > beta[i - 1])) throw InvalidArgument("schedule must be strictly increasing");
  }
  if (cfg.particles < 1 || cfg.volume_levels < 1 || !(cfg.theta0 < 0.0)) {
    throw InvalidArgument("AIS needs particles >= 1, volume_levels >= 1 and theta0 < 0");
  }
  const SkewRegion sr(shape);
  const HeightFunction start = initial_heights(sr);
  // Partition function of the tilted reference: the lowest configuration plus
  // the first excitations, which carry weight exp(theta0) each.
  long long excitations = 0;
  for (Vertex p : sr.region()->interior_vertices()) excitations += flip_direction(start, p) == 1;
  const double log_z0 = std::log1p(static_cast<double>(excitations) * std::exp(cfg.theta0));

  const SplitMix64 root(cfg.seed);
  std::vector<double> logw(static_cast<std::size_t>(cfg.particles), 0.0);
  auto particle = [&](int i) {
    Chain chain(start, w, root.split(static_cast<std::uint64_t>(i)).seed());
    chain.set_beta(0.0);
    chain.set_theta(cfg.theta0);
    double acc = 0.0;
    double theta = cfg.theta0;
    for (int j = 1; j <= cfg.volume_levels; ++j) {
      const double next = cfg.theta0 * (1.0 - static_cast<double>(j) / cfg.volume_levels);
      acc += (next - theta) * static_cast<double>(chain.volume());
      theta = next;
      chain.set_theta(theta);
      chain.run(cfg.steps_per_level);
    }
    for (std::size_t k = 1; k < beta.size(); ++k) {
      acc += (beta[k] - beta[k - 1]) * chain.log_weight();
      chain.set_beta(beta[k]);
      chain.run(cfg.steps_per_level);
    }
    logw[static_cast<std::size_t>(i)] = acc;
  };
  const int threads = std::clamp(cfg.threads, 1, cfg.particles);
  if (threads == 1) {
    for (int i = 0; i < cfg.particles; ++i) particle(i);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (int i = t; i < cfg.particles; i += threads) particle(i);
      });
    }
    for (auto& th : pool) th.join();
  }
  Estimate e = log_mean_exp(logw);
  e.value += log_z0;
  return e;
}

}  // namespace skewtab
