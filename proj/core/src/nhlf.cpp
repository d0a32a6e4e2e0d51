#include "skewtab/nhlf.hpp"

#include <algorithm>

namespace skewtab {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Log-domain semiring for transfer sums.
struct LogValue {
  double v = kNegInf;
  friend LogValue operator+(LogValue a, LogValue b) {
    if (a.v == kNegInf) return b;
    if (b.v == kNegInf) return a;
    const double m = std::max(a.v, b.v);
    return {m + std::log1p(std::exp(-std::abs(a.v - b.v)))};
  }
  friend LogValue operator*(LogValue a, LogValue b) { return {a.v + b.v}; }
};

}  // namespace

void LogSum::add(double x) {
  if (x == kNegInf) return;
  if (x > max_) {
    scaled_ = (max_ == kNegInf ? 0.0 : scaled_ * std::exp(max_ - x)) + 1.0;
    max_ = x;
  } else {
    scaled_ += std::exp(x - max_);
  }
}

void LogSum::merge(const LogSum& other) {
  if (other.empty()) return;
  if (empty()) {
    *this = other;
    return;
  }
  if (other.max_ > max_) {
    scaled_ = scaled_ * std::exp(max_ - other.max_) + other.scaled_;
    max_ = other.max_;
  } else {
    scaled_ += other.scaled_ * std::exp(other.max_ - max_);
  }
}

double LogSum::value() const { return empty() ? kNegInf : max_ + std::log(scaled_); }

// ---------------------------------------------------------------------------

WeightField WeightField::uniform() { return WeightField{}; }

WeightField WeightField::hook(const Partition& lambda, double divisor) {
  if (!(divisor > 0.0)) throw InvalidArgument("hook weight divisor must be positive");
  WeightField w;
  w.kind_ = Kind::Hook;
  w.label_ = "hook";
  w.lambda_ = std::make_shared<const Partition>(lambda);
  HookTable hooks(lambda);
  w.row_start_.assign(static_cast<std::size_t>(lambda.length()) + 1, 0);
  for (int i = 1; i <= lambda.length(); ++i) {
    w.row_start_[static_cast<std::size_t>(i)] =
        w.row_start_[static_cast<std::size_t>(i - 1)] + static_cast<std::size_t>(lambda.row(i));
  }
  for (int h : hooks.values()) w.table_.push_back(std::log(h / divisor));
  return w;
}

WeightField WeightField::hook_capped(const Partition& lambda, long long n, double eps) {
  if (!(eps > 0.0 && eps <= 1.0)) throw InvalidArgument("epsilon must lie in (0, 1]");
  if (n < 1) throw InvalidArgument("scale N must be positive");
  WeightField w = hook(lambda, std::sqrt(static_cast<double>(n)));
  w.kind_ = Kind::HookCapped;
  w.label_ = "hook_capped";
  w.eps_ = eps;
  const double floor_value = std::log(eps);
  for (double& x : w.table_) x = std::max(x, floor_value);
  return w;
}

WeightField WeightField::custom(Fn fn, bool flat_only, std::string label) {
  WeightField w;
  w.kind_ = Kind::Custom;
  w.flat_only_ = flat_only;
  w.label_ = std::move(label);
  w.fn_ = std::move(fn);
  return w;
}

double WeightField::flat(Cell c) const {
  switch (kind_) {
    case Kind::Uniform:
      return 0.0;
    case Kind::Custom:
      return fn_(3, c.col - 0.5, c.row - 0.5);
    default:
      if (!lambda_->contains(c)) return kNegInf;
      return table_[row_start_[static_cast<std::size_t>(c.row - 1)] + static_cast<std::size_t>(c.col - 1)];
  }
}

double WeightField::operator()(int type, double x, double y) const {
  if (kind_ == Kind::Custom) return fn_(type, x, y);
  if (type != 3 || kind_ == Kind::Uniform) return 0.0;
  return flat({static_cast<int>(std::floor(y)) + 1, static_cast<int>(std::floor(x)) + 1});
}

double tiling_weight(const Tiling& t, const WeightField& w) {
  double total = 0.0;
  for (const Lozenge& z : t) {
    if (w.flat_only() && z.type != 3) continue;
    total += w(z.type, z.x(), z.y());
  }
  return total;
}

double tiling_weight(const HeightFunction& h, const WeightField& w) {
  return tiling_weight(heights_to_tiling(h), w);
}

double flip_delta(Vertex c, int dir, const WeightField& w) {
  auto weight = [&](Lozenge z) { return w(z.type, z.x(), z.y()); };
  // Lozenges around c when it sits high (after an up-flip) and low.
  const double high = weight({3, c}) + weight({1, c - kE1}) + weight({2, c - kDiag});
  const double low = weight({3, c - kDiag}) + weight({1, c}) + weight({2, c - kE1});
  return dir > 0 ? high - low : low - high;
}

LogSum partition_function(const SkewShape& shape, const WeightField& w, long long limit) {
  SkewRegion sr(shape);
  if (w.flat_only()) {
    const LogValue total = sum_over_offsets<LogValue>(
        sr, LogValue{0.0}, [&](Cell c, int k) { return LogValue{w.flat({c.row + k, c.col + k})}; });
    return LogSum::of(total.v);
  }
  LogSum sum;
  for (const auto& k : enumerate_offsets(sr, limit)) sum.add(tiling_weight(sr.heights(k), w));
  return sum;
}

BigCount hook_weight_sum(const SkewShape& shape) {
  SkewRegion sr(shape);
  const HookTable hooks(shape.outer());
  return sum_over_offsets<BigCount>(sr, BigCount(1),
                                    [&](Cell c, int k) { return BigCount(hooks.at({c.row + k, c.col + k})); });
}

BigCount count_nhlf(const SkewShape& shape) {
  if (shape.size() == 0) return 1;
  const HookTable hooks(shape.outer());
  BigCount denom = 1;
  for (int h : hooks.values()) denom *= h;
  BigCount num = factorial(static_cast<int>(shape.size())) * hook_weight_sum(shape);
  if (num % denom != 0) throw std::logic_error("hook sum is not divisible by the hook product");
  return num / denom;
}

WeightField capped_weights(const SkewShape& shape, long long n, double eps) {
  return WeightField::hook_capped(shape.outer(), n, eps);
}

double cap_gap(const SkewShape& shape, long long n, double eps) {
  const WeightField raw = WeightField::hook(shape.outer(), std::sqrt(static_cast<double>(n)));
  const WeightField capped = capped_weights(shape, n, eps);
  return (partition_function(shape, capped).value() - partition_function(shape, raw).value()) /
         static_cast<double>(n);
}

double cap_bound(double eps) {
  if (!(eps > 0.0 && eps <= 1.0)) throw InvalidArgument("epsilon must lie in (0, 1]");
  return eps * eps * (1.0 - std::log(eps));
}

}  // namespace skewtab
