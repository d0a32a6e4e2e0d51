#pragma once

// Weighted partition functions over lozenge tilings and the excited-diagram
// hook-length evaluation of f^{lambda/mu}.

#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <string>

#include "skewtab/skew_region.hpp"

namespace skewtab {

/// Natural log of a positive sum, accumulated without overflow.
class LogSum {
 public:
  LogSum() = default;
  static LogSum of(double log_value) {
    LogSum s;
    s.add(log_value);
    return s;
  }

  void add(double log_value);
  void merge(const LogSum& other);
  [[nodiscard]] double value() const;
  [[nodiscard]] bool empty() const { return max_ == -std::numeric_limits<double>::infinity(); }

 private:
  double max_ = -std::numeric_limits<double>::infinity();
  double scaled_ = 0.0;  // sum of exp(term - max_)
};

/// Log-weights per lozenge type and center position. Hook-type fields put
/// all their weight on flat (type 3) lozenges; the flat lozenge centered at
/// (x, y) sits over the Young cell (floor(y)+1, floor(x)+1).
class WeightField {
 public:
  enum class Kind { Uniform, Hook, HookCapped, Custom };
  using Fn = std::function<double(int type, double x, double y)>;

  static WeightField uniform();
  /// log(h_lambda / divisor) on flat lozenges.
  static WeightField hook(const Partition& lambda, double divisor = 1.0);
  /// max(log(h_lambda / sqrt N), log eps) on flat lozenges.
  static WeightField hook_capped(const Partition& lambda, long long n, double eps);
  /// Arbitrary field; `flat_only` promises that types 1 and 2 weigh zero.
  static WeightField custom(Fn fn, bool flat_only = false, std::string label = "custom");

  [[nodiscard]] double operator()(int type, double x, double y) const;
  /// Weight of a flat lozenge over the given Young cell.
  [[nodiscard]] double flat(Cell c) const;
  [[nodiscard]] Kind kind() const { return kind_; }
  [[nodiscard]] bool flat_only() const { return flat_only_; }
  [[nodiscard]] const std::string& label() const { return label_; }
  [[nodiscard]] double epsilon() const { return eps_; }

 private:
  Kind kind_ = Kind::Uniform;
  bool flat_only_ = true;
  std::string label_ = "uniform";
  double eps_ = 0.0;
  std::shared_ptr<const Partition> lambda_;
  std::vector<double> table_;  // flat weights per cell of lambda, row-major
  std::vector<std::size_t> row_start_;
  Fn fn_;
};

double tiling_weight(const Tiling& t, const WeightField& w);
double tiling_weight(const HeightFunction& h, const WeightField& w);

/// Change of log-weight when a legal flip moves vertex p by dir (+1 or -1).
double flip_delta(Vertex p, int dir, const WeightField& w);

/// log of the sum of weights over all excited diagrams. Flat-only fields use
/// a row-by-row transfer sum; other fields enumerate (subject to `limit`).
LogSum partition_function(const SkewShape& shape, const WeightField& w,
                          long long limit = kEnumerationLimit);

/// Sum over excited diagrams of the product of hooks of their cells, exact.
BigCount hook_weight_sum(const SkewShape& shape);
/// N! / prod_lambda h * hook_weight_sum.
BigCount count_nhlf(const SkewShape& shape);

/// Hook field scaled by sqrt N and capped from below at eps, 0 < eps <= 1.
WeightField capped_weights(const SkewShape& shape, long long n, double eps);
/// (log Z^eps_N - log Z_N) / N for the scaled hook fields of the shape.
double cap_gap(const SkewShape& shape, long long n, double eps);
/// |eps * integral_0^eps log x dx| = eps^2 (1 - log eps).
double cap_bound(double eps);

}  // namespace skewtab
