#pragma once

// Integer partitions, skew shapes, hook lengths and the sqrt(N) scaling that
// connects lattice shapes to continuous profiles.
//
// Coordinates follow English notation: rows x grow downward, columns y grow
// rightward, both 1-indexed.

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace skewtab {

/// Raised for malformed shapes, profiles and out-of-range arguments.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a point lies outside the diagram it is evaluated on.
class OutOfDomain : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

struct Cell {
  int row = 0;
  int col = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Weakly decreasing sequence of positive row lengths. Zero parts passed to
/// the constructor are dropped; increasing input is rejected.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  [[nodiscard]] std::span<const int> parts() const { return parts_; }
  [[nodiscard]] int length() const { return static_cast<int>(parts_.size()); }
  [[nodiscard]] bool empty() const { return parts_.empty(); }
  [[nodiscard]] long long size() const { return size_; }

  /// Row length of 1-indexed row `row`; 0 beyond the last row.
  [[nodiscard]] int row(int row) const {
    return (row >= 1 && row <= length()) ? parts_[static_cast<std::size_t>(row - 1)] : 0;
  }
  /// Column length of 1-indexed column `col`.
  [[nodiscard]] int col(int col) const;

  [[nodiscard]] bool contains(Cell c) const {
    return c.row >= 1 && c.col >= 1 && c.col <= row(c.row);
  }
  [[nodiscard]] bool contains(const Partition& other) const;

  [[nodiscard]] Partition conjugate() const;
  [[nodiscard]] std::vector<Cell> cells() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  long long size_ = 0;
};

/// Staircase (n-1, n-2, ..., 1).
Partition staircase(int n);
/// Rectangle with `rows` rows of length `cols`.
Partition rectangle(int rows, int cols);

/// lambda/mu with mu contained in lambda and an edge-connected cell set.
/// The empty skew shape lambda/lambda is accepted.
class SkewShape {
 public:
  SkewShape() = default;
  SkewShape(Partition outer, Partition inner);

  [[nodiscard]] const Partition& outer() const { return outer_; }
  [[nodiscard]] const Partition& inner() const { return inner_; }
  [[nodiscard]] long long size() const { return outer_.size() - inner_.size(); }
  [[nodiscard]] bool contains(Cell c) const {
    return outer_.contains(c) && !inner_.contains(c);
  }
  [[nodiscard]] std::vector<Cell> cells() const;

  friend bool operator==(const SkewShape&, const SkewShape&) = default;

 private:
  Partition outer_;
  Partition inner_;
};

/// True when the cells of lambda/mu form one edge-connected component.
bool is_connected(const Partition& outer, const Partition& inner);

/// Thick hook (a+c)^(b+c) / a^b.
SkewShape thick_hook(int a, int b, int c);
/// Thick ribbon delta_{2k} / delta_k = (2k-1,...,1)/(k-1,...,1).
SkewShape thick_ribbon(int k);

/// Hook lengths of every cell of a partition, stored row-major.
class HookTable {
 public:
  explicit HookTable(const Partition& lambda);

  [[nodiscard]] int at(Cell c) const;
  [[nodiscard]] const Partition& shape() const { return shape_; }
  /// Hook lengths in row-major order of the cells.
  [[nodiscard]] std::span<const int> values() const { return values_; }

 private:
  Partition shape_;
  std::vector<std::size_t> row_offset_;
  std::vector<int> values_;
};

HookTable hook_table(const Partition& lambda);

/// h_{lambda}(floor(x sqrt N)+1, floor(y sqrt N)+1) / sqrt N.
double scaled_hook(const Partition& lambda, double x, double y, long long n);

/// Piecewise-linear non-increasing function given by breakpoints. Repeated
/// abscissae encode jumps; evaluation at a jump takes the right limit, which
/// matches the boundary of a Young diagram scanned downward.
class PiecewiseLinear {
 public:
  PiecewiseLinear() = default;
  explicit PiecewiseLinear(std::vector<std::pair<double, double>> points);

  [[nodiscard]] double operator()(double x) const;
  /// sup{x : f(x) > y}; the continuous analogue of a conjugate column length.
  [[nodiscard]] double inverse(double y) const;
  [[nodiscard]] double integral() const;
  [[nodiscard]] double domain_end() const { return pts_.empty() ? 0.0 : pts_.back().first; }
  [[nodiscard]] double max_value() const { return pts_.empty() ? 0.0 : pts_.front().second; }
  [[nodiscard]] std::span<const std::pair<double, double>> points() const { return pts_; }
  [[nodiscard]] PiecewiseLinear scaled(double factor) const;

 private:
  std::vector<std::pair<double, double>> pts_;
};

/// Continuous stable shape psi/phi: psi bounds the outer diagram, phi the inner
/// one, both as functions of the scaled row coordinate. Construction rescales
/// both curves so that area(psi) - area(phi) = 1.
class StableProfile {
 public:
  StableProfile(PiecewiseLinear psi, PiecewiseLinear phi);

  [[nodiscard]] const PiecewiseLinear& psi() const { return psi_; }
  [[nodiscard]] const PiecewiseLinear& phi() const { return phi_; }
  /// area(psi/phi) after normalization; equals 1 within 1e-9.
  [[nodiscard]] double area() const { return area_; }
  /// Scale applied at load time to reach unit area.
  [[nodiscard]] double normalization() const { return scale_; }

  /// Continuous hook function: arm + leg of the point (x, y) inside C(psi).
  [[nodiscard]] double hook(double x, double y) const;
  [[nodiscard]] bool inside_outer(double x, double y) const;

 private:
  PiecewiseLinear psi_;
  PiecewiseLinear phi_;
  double area_ = 0.0;
  double scale_ = 1.0;
};

/// Profiles of the families used throughout the toolkit.
StableProfile thick_hook_profile(double alpha, double beta);
StableProfile thick_ribbon_profile();
StableProfile square_profile();

/// Lattice shape with rows round(sqrt N * psi(i / sqrt N)) (same for phi),
/// repaired to be weakly decreasing.
SkewShape stable_family(const StableProfile& profile, long long n);

/// Sup-distance between the scaled diagram boundary lambda/sqrt(N) and psi,
/// sampled on the rows of the diagram.
double boundary_distance(const Partition& lambda, const PiecewiseLinear& psi, long long n);

}  // namespace skewtab
