#pragma once

// The lozenge-tiling model of a skew shape lambda/mu.
//
// Each cell (i,j) of mu carries an offset k(i,j) >= 0; the offsets are weakly
// increasing along rows and columns and the shifted cell (i+k, j+k) must lie
// in lambda. Such arrays are in bijection with excited diagrams of lambda/mu
// and with height functions on the projection of the prism mu x [0, K], K the
// largest admissible offset. Offset k(i,j) is the height of the flat lozenge
// coming from cell (i,j); raising it by one is an up-flip at vertex
// (j + k, i + k).

#include <algorithm>
#include <cstdint>
#include <memory>
#include <vector>

#include "skewtab/exact_count.hpp"
#include "skewtab/lattice.hpp"

namespace skewtab {

/// Offsets of the cells of mu in row-major order.
using Offsets = std::vector<int>;

inline constexpr long long kEnumerationLimit = 10'000'000;

class SkewRegion {
 public:
  explicit SkewRegion(SkewShape shape);

  [[nodiscard]] const SkewShape& shape() const { return shape_; }
  [[nodiscard]] const std::shared_ptr<const Region>& region() const { return region_; }
  /// Largest offset over all cells of mu (0 when mu is empty).
  [[nodiscard]] int kmax() const { return kmax_; }
  /// Largest offset allowed at a cell of mu.
  [[nodiscard]] int cap(Cell c) const { return cap_[index(c)]; }
  [[nodiscard]] const std::vector<Cell>& cells() const { return cells_; }
  /// Row-major position of a cell of mu.
  [[nodiscard]] std::size_t index(Cell c) const;

  [[nodiscard]] HeightFunction heights(const Offsets& k) const;
  /// Offsets of a height function of this region; throws InvalidHeight if h
  /// does not come from an excited diagram.
  [[nodiscard]] Offsets offsets(const HeightFunction& h) const;
  [[nodiscard]] bool admissible(const Offsets& k) const;

  /// All offsets zero: the excited diagram mu itself.
  [[nodiscard]] Offsets lowest() const { return Offsets(cells_.size(), 0); }
  /// Every cell pushed as far as it goes.
  [[nodiscard]] Offsets highest() const;
  /// Cells (i+k, j+k) of the excited diagram.
  [[nodiscard]] std::vector<Cell> excited_cells(const Offsets& k) const;

 private:
  SkewShape shape_;
  std::vector<Cell> cells_;
  std::vector<std::size_t> row_start_;
  std::vector<int> cap_;
  int kmax_ = 0;
  std::shared_ptr<const Region> region_;
};

/// Boundary heights of the skew region: the admissible stepped curve whose
/// extensions (subject to the region mask) are the excited diagrams.
std::vector<PartialHeight> skew_boundary(const SkewRegion& sr);

/// Sum over admissible offset arrays of the product of per-cell factors
/// weight(cell, offset), computed row by row. T must form a semiring with
/// T{} as zero.
template <class T, class Weight>
T sum_over_offsets(const SkewRegion& sr, T one, Weight weight);

/// Number of excited diagrams, exact.
BigCount count_excited(const SkewRegion& sr);

/// Every admissible offset array in lexicographic order. Throws ResourceGuard
/// if there are more than `limit`.
std::vector<Offsets> enumerate_offsets(const SkewRegion& sr, long long limit = kEnumerationLimit);
/// Height functions of all excited diagrams, in the same order.
std::vector<HeightFunction> enumerate_H(const SkewShape& shape, long long limit = kEnumerationLimit);

/// Tilings of any region by brute-force search over triangles; a slow but
/// independent reference for small regions.
std::vector<Tiling> enumerate_tilings_dfs(const Region& region, long long limit = 1'000'000);

// ---------------------------------------------------------------------------

template <class T, class Weight>
T sum_over_offsets(const SkewRegion& sr, T one, Weight weight) {
  const Partition& mu = sr.shape().inner();
  std::vector<std::pair<std::vector<int>, T>> layer{{{}, one}};
  for (int i = 1; i <= mu.length(); ++i) {
    const int len = mu.row(i);
    std::vector<std::pair<std::vector<int>, T>> next;
    std::vector<int> row(static_cast<std::size_t>(len));
    // States of the new row are generated in lexicographic order for each
    // parent; merge by sorting afterwards.
    for (const auto& [prev, val] : layer) {
      auto rec = [&](auto&& self, int j, const T& acc) -> void {
        if (j > len) {
          next.emplace_back(row, val * acc);
          return;
        }
        int lo = j > 1 ? row[static_cast<std::size_t>(j - 2)] : 0;
        if (i > 1) lo = std::max(lo, prev[static_cast<std::size_t>(j - 1)]);
        const int hi = sr.cap({i, j});
        for (int k = lo; k <= hi; ++k) {
          row[static_cast<std::size_t>(j - 1)] = k;
          self(self, j + 1, acc * weight(Cell{i, j}, k));
        }
      };
      rec(rec, 1, one);
    }
    std::sort(next.begin(), next.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    layer.clear();
    for (auto& entry : next) {
      if (!layer.empty() && layer.back().first == entry.first) {
        layer.back().second = layer.back().second + entry.second;
      } else {
        layer.push_back(std::move(entry));
      }
    }
  }
  T total{};
  for (const auto& entry : layer) total = total + entry.second;
  return total;
}

}  // namespace skewtab
