#pragma once

// Independent reference computations used by the tests. None of these call
// into the library's counting code.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <unordered_map>
#include <vector>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "skewtab/shapes.hpp"

namespace oracle {

using Big = boost::multiprecision::cpp_int;
using skewtab::Cell;
using skewtab::Partition;
using skewtab::SkewShape;

// Linear extensions of the cell poset by DP over downsets stored as bitmasks.
inline Big linear_extensions(const SkewShape& s) {
  const auto cells = s.cells();
  const std::size_t n = cells.size();
  if (n == 0) return 1;
  std::vector<std::uint32_t> need(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const bool up = cells[b].row == cells[a].row - 1 && cells[b].col == cells[a].col;
      const bool left = cells[b].row == cells[a].row && cells[b].col == cells[a].col - 1;
      if (up || left) need[a] |= 1u << b;
    }
  const std::uint32_t full = (n == 32) ? 0xffffffffu : ((1u << n) - 1);
  std::unordered_map<std::uint32_t, Big> memo;
  std::function<Big(std::uint32_t)> go = [&](std::uint32_t mask) -> Big {
    if (mask == full) return 1;
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    Big total = 0;
    for (std::size_t a = 0; a < n; ++a)
      if (!(mask >> a & 1u) && (need[a] & mask) == need[a]) total += go(mask | 1u << a);
    memo.emplace(mask, total);
    return total;
  };
  return go(0);
}

inline int hook(const Partition& l, Cell c) {
  int arm = 0, leg = 0;
  while (l.contains({c.row, c.col + arm + 1})) ++arm;
  while (l.contains({c.row + leg + 1, c.col})) ++leg;
  return arm + leg + 1;
}

// a x b arrays with entries in [0, c], weakly decreasing along rows and columns.
inline long long plane_partitions(int a, int b, int c) {
  std::vector<int> grid(static_cast<std::size_t>(a * b), 0);
  long long count = 0;
  std::function<void(int)> place = [&](int k) {
    if (k == a * b) {
      ++count;
      return;
    }
    const int i = k / b, j = k % b;
    int hi = c;
    if (i > 0) hi = std::min(hi, grid[static_cast<std::size_t>((i - 1) * b + j)]);
    if (j > 0) hi = std::min(hi, grid[static_cast<std::size_t>(i * b + j - 1)]);
    for (int v = 0; v <= hi; ++v) {
      grid[static_cast<std::size_t>(k)] = v;
      place(k + 1);
    }
  };
  place(0);
  return count;
}

// Lobachevsky function by direct quadrature of -int_0^x log|2 sin t| dt.
inline double lobachevsky(double x) {
  if (x == 0.0) return 0.0;
  boost::math::quadrature::tanh_sinh<double> q;
  auto f = [](double t) { return -std::log(std::abs(2.0 * std::sin(t))); };
  // split at multiples of pi/2 to keep the log singularities at endpoints
  double total = 0.0, lo = 0.0;
  const double sgn = x < 0 ? -1.0 : 1.0;
  const double end = std::abs(x);
  while (lo < end) {
    double hi = std::min(end, (std::floor(lo / (M_PI / 2)) + 1) * (M_PI / 2));
    if (hi <= lo + 1e-12) hi = std::min(end, lo + M_PI / 2);
    total += q.integrate(f, lo, hi);
    lo = hi;
  }
  return sgn * total;
}

inline double sigma(double s, double t) {
  const double r = 1.0 - s - t;
  return (lobachevsky(M_PI * s) + lobachevsky(M_PI * t) + lobachevsky(M_PI * r)) / M_PI;
}

inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int maxpart) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(left, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

// Partitions contained in lambda, including the empty one.
inline std::vector<Partition> sub_partitions(const Partition& l) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int row) {
    out.emplace_back(cur);
    if (row > l.length()) return;
    const int cap = std::min(l.row(row), cur.empty() ? l.row(row) : cur.back());
    for (int p = 1; p <= cap; ++p) {
      cur.push_back(p);
      rec(row + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

// All connected skew shapes with |lambda| <= max_outer.
inline std::vector<SkewShape> connected_shapes(int max_outer) {
  std::vector<SkewShape> out;
  for (int n = 0; n <= max_outer; ++n)
    for (const auto& l : partitions_of(n))
      for (const auto& m : sub_partitions(l))
        if (skewtab::is_connected(l, m)) out.emplace_back(l, m);
  return out;
}

// Random connected skew shape with at most max_cells cells.
inline SkewShape random_shape(std::mt19937_64& rng, int max_cells) {
  for (;;) {
    std::vector<int> parts;
    int rows = std::uniform_int_distribution<int>(1, 6)(rng);
    int prev = 8;
    for (int i = 0; i < rows; ++i) {
      prev = std::uniform_int_distribution<int>(1, prev)(rng);
      parts.push_back(prev);
    }
    const Partition l(parts);
    std::vector<int> inner;
    int cap = 99;
    for (int i = 1; i <= l.length(); ++i) {
      cap = std::min(cap, l.row(i));
      const int v = std::uniform_int_distribution<int>(0, cap)(rng);
      if (v == 0) break;
      inner.push_back(v);
      cap = v;
    }
    const Partition m(inner);
    if (!skewtab::is_connected(l, m)) continue;
    if (l.size() - m.size() > max_cells) continue;
    return SkewShape(l, m);
  }
}

}  // namespace oracle
