#include <doctest.h>

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "oracles.hpp"
#include "skewtab/lattice.hpp"
#include "skewtab/skew_region.hpp"

using namespace skewtab;

namespace {

std::vector<int> values(const HeightFunction& h) {
  std::vector<int> v;
  for (Vertex p : h.region().vertices()) v.push_back(h.at(p));
  return v;
}

std::vector<SkewShape> small_shapes() {
  std::vector<SkewShape> out;
  for (auto& s : oracle::connected_shapes(7))
    if (s.size() > 0) out.push_back(s);
  out.push_back(thick_hook(2, 2, 2));
  return out;
}

}  // namespace

TEST_CASE("small hand-built regions") {
  const std::vector<Triangle> flat{{{0, 0}, TriangleKind::A}, {{0, 0}, TriangleKind::B}};
  const Region r1(flat);
  const auto t1 = enumerate_tilings_dfs(r1);
  REQUIRE(t1.size() == 1);
  CHECK(t1[0][0].type == 3);

  const std::vector<Triangle> tall{{{0, 0}, TriangleKind::A}, {{1, 0}, TriangleKind::B}};
  const auto t2 = enumerate_tilings_dfs(Region(tall));
  REQUIRE(t2.size() == 1);
  CHECK(t2[0][0].type == 2);

  // unit hexagon around (1,1): two tilings
  const std::vector<Triangle> hex{{{0, 0}, TriangleKind::A}, {{0, 0}, TriangleKind::B}, {{1, 1}, TriangleKind::A},
                                  {{1, 1}, TriangleKind::B}, {{1, 0}, TriangleKind::B}, {{0, 1}, TriangleKind::A}};
  const Region r3(hex);
  CHECK(enumerate_tilings_dfs(r3).size() == 2);
  CHECK(r3.interior_vertices().size() == 1);
  // forbidding the two flats through the center leaves one
  const std::vector<Vertex> mask{{0, 0}};
  CHECK(enumerate_tilings_dfs(Region(hex, mask)).size() == 1);
}

TEST_CASE("excited diagrams are exactly the masked tilings") {
  for (const auto& s : small_shapes()) {
    const SkewRegion sr(s);
    const auto hs = enumerate_H(s);
    auto dfs = enumerate_tilings_dfs(*sr.region());
    std::vector<Tiling> mine;
    for (const auto& h : hs) mine.push_back(heights_to_tiling(h));
    std::sort(mine.begin(), mine.end());
    std::sort(dfs.begin(), dfs.end());
    CHECK(mine == dfs);
    CHECK(count_excited(sr) == hs.size());
  }
}

TEST_CASE("heights and tilings round trip") {
  for (const auto& s : small_shapes()) {
    const SkewRegion sr(s);
    for (const auto& h : enumerate_H(s)) {
      CHECK(h.valid());
      const Tiling t = heights_to_tiling(h);
      const Vertex first = *std::min_element(h.region().vertices().begin(), h.region().vertices().end());
      CHECK(tiling_to_heights(t, sr.region(), h.at(first)) == h);
      CHECK(sr.heights(sr.offsets(h)) == h);
    }
  }
}

TEST_CASE("lozenge type counts are constant on a region") {
  for (const auto& s : small_shapes()) {
    const auto hs = enumerate_H(s);
    const TypeCounts first = type_counts(hs.front());
    for (const auto& h : hs) CHECK(type_counts(h) == first);
    // two triangles per lozenge
    CHECK(2 * (first.type1 + first.type2 + first.type3) ==
          static_cast<long long>(hs.front().region().triangle_count()));
    // flat lozenges are the cells of the excited diagram
    CHECK(first.type3 == s.inner().size());
  }
}

TEST_CASE("flip involution and flip-graph connectivity") {
  for (const auto& s : small_shapes()) {
    const auto hs = enumerate_H(s);
    std::map<std::vector<int>, std::size_t> id;
    for (std::size_t i = 0; i < hs.size(); ++i) id.emplace(values(hs[i]), i);
    REQUIRE(id.size() == hs.size());

    for (const auto& h : hs)
      for (Vertex p : h.region().interior_vertices()) {
        HeightFunction g = h;
        const int dir = flip(g, p);
        if (dir == 0) {
          CHECK(g == h);
          continue;
        }
        CHECK(g.valid());
        CHECK(id.count(values(g)) == 1);  // flips respect the mask
        CHECK(flip_direction(g, p) == -dir);
        CHECK(flip(g, p) == -dir);
        CHECK(g == h);
      }

    std::vector<char> seen(hs.size(), 0);
    std::queue<std::size_t> todo;
    todo.push(0);
    seen[0] = 1;
    std::size_t reached = 1;
    while (!todo.empty()) {
      const HeightFunction& h = hs[todo.front()];
      todo.pop();
      for (Vertex p : h.region().interior_vertices()) {
        HeightFunction g = h;
        if (flip(g, p) == 0) continue;
        const std::size_t j = id.at(values(g));
        if (!seen[j]) {
          seen[j] = 1;
          ++reached;
          todo.push(j);
        }
      }
    }
    CHECK(reached == hs.size());
  }
}

TEST_CASE("extensions are the pointwise extremes") {
  for (const auto& s : small_shapes()) {
    const SkewRegion sr(s);
    const auto hs = enumerate_H(s);
    const auto bnd = skew_boundary(sr);
    const HeightFunction lo = extend_lower(bnd, sr.region());
    const HeightFunction hi = extend_upper(bnd, sr.region());
    std::vector<int> vmin = values(hs.front()), vmax = vmin;
    for (const auto& h : hs) {
      const auto v = values(h);
      for (std::size_t i = 0; i < v.size(); ++i) {
        vmin[i] = std::min(vmin[i], v[i]);
        vmax[i] = std::max(vmax[i], v[i]);
      }
      // every tiling has the same boundary
      const auto b = boundary_values(h);
      REQUIRE(b.size() == boundary_values(hs.front()).size());
      for (std::size_t i = 0; i < b.size(); ++i) CHECK(b[i].value == boundary_values(hs.front())[i].value);
    }
    CHECK(values(lo) == vmin);
    CHECK(values(hi) == vmax);
    CHECK(lo == sr.heights(sr.lowest()));
    CHECK(hi == sr.heights(sr.highest()));
    CHECK(realizable(bnd, sr.region()));
  }
}

TEST_CASE("inconsistent prescriptions are rejected") {
  const SkewRegion sr(thick_hook(2, 2, 2));
  auto bnd = skew_boundary(sr);
  bnd.front().value += 5;
  CHECK_FALSE(realizable(bnd, sr.region()));
  CHECK_THROWS_AS(extend_upper(bnd, sr.region()), ExtensionError);
  CHECK_THROWS_AS(extend_lower({}, sr.region()), InvalidArgument);

  HeightFunction h = sr.heights(sr.lowest());
  h.set(h.region().interior_vertices().front(), 7);
  CHECK_FALSE(h.valid());
  CHECK_THROWS_AS(h.validate(), InvalidHeight);
  CHECK_THROWS_AS(heights_to_tiling(h), InvalidHeight);
}
