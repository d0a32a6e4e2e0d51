#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "skewtab/nhlf.hpp"
#include "skewtab/skew_region.hpp"

using namespace skewtab;

namespace {

// Young cells under the flat lozenges of a tiling.
std::vector<Cell> flat_cells(const HeightFunction& h) {
  std::vector<Cell> out;
  for (const Lozenge& z : heights_to_tiling(h))
    if (z.type == 3) out.push_back({z.anchor.v + 1, z.anchor.u + 1});
  return out;
}

oracle::Big hook_product(const Partition& l, const std::vector<Cell>& cells) {
  oracle::Big p = 1;
  for (Cell c : cells) p *= oracle::hook(l, c);
  return p;
}

}  // namespace

TEST_CASE("worked example terms") {
  const SkewShape s(Partition({3, 3, 2}), Partition({2, 1}));
  std::vector<int> terms;
  for (const auto& h : enumerate_H(s)) terms.push_back(static_cast<int>(hook_product(s.outer(), flat_cells(h))));
  std::sort(terms.begin(), terms.end());
  CHECK(terms == std::vector<int>{3, 5, 20, 20, 80});
  CHECK(hook_weight_sum(s) == 128);
  CHECK(count_nhlf(s) == 16);
}

TEST_CASE("hook weight sum equals the enumerated sum") {
  for (const auto& s : oracle::connected_shapes(8)) {
    oracle::Big want = 0;
    for (const auto& h : enumerate_H(s)) want += hook_product(s.outer(), flat_cells(h));
    CHECK(hook_weight_sum(s) == want);
  }
}

TEST_CASE("NHLF counts standard tableaux") {
  for (const auto& s : oracle::connected_shapes(8)) CHECK(count_nhlf(s) == oracle::linear_extensions(s));
  std::mt19937_64 rng(11);
  for (int i = 0; i < 40; ++i) {
    const SkewShape s = oracle::random_shape(rng, 20);
    CHECK(count_nhlf(s) == oracle::linear_extensions(s));
  }
}

TEST_CASE("tiling weight is the log hook product") {
  const SkewShape s = thick_hook(2, 2, 2);
  const WeightField w = WeightField::hook(s.outer());
  for (const auto& h : enumerate_H(s)) {
    const double want = std::log(static_cast<double>(hook_product(s.outer(), flat_cells(h))));
    CHECK(tiling_weight(h, w) == doctest::Approx(want).epsilon(1e-12));
  }
  CHECK(tiling_weight(enumerate_H(s).front(), WeightField::uniform()) == 0.0);
}

TEST_CASE("flip delta equals the change in total weight") {
  const SkewShape s = thick_hook(2, 1, 2);
  const WeightField fields[] = {
      WeightField::hook(s.outer()), WeightField::hook_capped(s.outer(), s.size(), 0.4),
      WeightField::custom([](int type, double x, double y) { return 0.3 * type + 0.1 * x * x - 0.2 * y; })};
  for (const auto& w : fields)
    for (const auto& h : enumerate_H(s))
      for (Vertex p : h.region().interior_vertices()) {
        HeightFunction g = h;
        const int dir = flip(g, p);
        if (dir == 0) continue;
        CHECK(flip_delta(p, dir, w) == doctest::Approx(tiling_weight(g, w) - tiling_weight(h, w)).epsilon(1e-12));
      }
}

TEST_CASE("partition function: transfer sum vs enumeration") {
  for (const auto& s : {thick_hook(2, 2, 2), thick_ribbon(4), SkewShape(Partition({5, 4, 4, 2}), Partition({2, 1}))}) {
    const WeightField hook = WeightField::hook(s.outer(), 3.0);
    const WeightField same = WeightField::custom([&](int t, double x, double y) { return hook(t, x, y); }, false);
    LogSum direct;
    for (const auto& h : enumerate_H(s)) direct.add(tiling_weight(h, hook));
    CHECK(partition_function(s, hook).value() == doctest::Approx(direct.value()).epsilon(1e-12));
    CHECK(partition_function(s, same).value() == doctest::Approx(direct.value()).epsilon(1e-12));
    CHECK(partition_function(s, WeightField::uniform()).value() ==
          doctest::Approx(std::log(static_cast<double>(enumerate_H(s).size()))));
  }
}

TEST_CASE("log sums") {
  LogSum a, b;
  double plain = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double v = std::sin(i) * 3.0;
    (i % 2 ? a : b).add(v);
    plain += std::exp(v);
  }
  a.merge(b);
  CHECK(a.value() == doctest::Approx(std::log(plain)).epsilon(1e-13));
  LogSum big;
  big.add(1000.0);
  big.add(1000.0);
  CHECK(big.value() == doctest::Approx(1000.0 + std::log(2.0)));
  CHECK(LogSum().empty());
}

TEST_CASE("capping gap against direct enumeration") {
  for (int a = 1; a <= 3; ++a) {
    const SkewShape s = thick_hook(a, a, a);
    const double n = static_cast<double>(s.size());
    const auto hs = enumerate_H(s);
    double prev = -1.0;
    for (double eps : {0.5, 0.25, 0.1}) {
      double raw = 0.0, capped = 0.0;
      for (const auto& h : hs) {
        double pr = 1.0, pc = 1.0;
        for (Cell c : flat_cells(h)) {
          const double x = oracle::hook(s.outer(), c) / std::sqrt(n);
          pr *= x;
          pc *= std::max(x, eps);
        }
        raw += pr;
        capped += pc;
      }
      const double want = (std::log(capped) - std::log(raw)) / n;
      const double gap = cap_gap(s, s.size(), eps);
      CHECK(gap == doctest::Approx(want).epsilon(1e-10));
      CHECK(gap >= 0.0);
      CHECK(gap <= cap_bound(eps));
      if (prev >= 0.0) CHECK(gap <= prev + 1e-15);
      prev = gap;
    }
  }
}

TEST_CASE("cap bound is |eps * int_0^eps log x dx|") {
  boost::math::quadrature::tanh_sinh<double> q;
  for (double eps : {0.5, 0.25, 0.1, 0.01}) {
    const double integral = q.integrate([](double x) { return std::log(x); }, 0.0, eps);
    CHECK(cap_bound(eps) == doctest::Approx(std::abs(eps * integral)).epsilon(1e-10));
  }
  CHECK_THROWS_AS(cap_bound(0.0), InvalidArgument);
  CHECK_THROWS_AS(cap_bound(1.5), InvalidArgument);
}
