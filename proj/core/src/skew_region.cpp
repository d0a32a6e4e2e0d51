#include "skewtab/skew_region.hpp"

#include <algorithm>

namespace skewtab {

SkewRegion::SkewRegion(SkewShape shape) : shape_(std::move(shape)) {
  const Partition& lam = shape_.outer();
  const Partition& mu = shape_.inner();
  cells_ = mu.cells();
  row_start_.assign(static_cast<std::size_t>(mu.length()) + 1, 0);
  for (int i = 1; i <= mu.length(); ++i) {
    row_start_[static_cast<std::size_t>(i)] = row_start_[static_cast<std::size_t>(i - 1)] +
                                              static_cast<std::size_t>(mu.row(i));
  }
  cap_.reserve(cells_.size());
  for (const Cell& c : cells_) {
    int k = 0;
    while (lam.contains({c.row + k + 1, c.col + k + 1})) ++k;
    cap_.push_back(k);
    kmax_ = std::max(kmax_, k);
  }

  // Triangles of the lowest tiling: the flat squares of mu plus the walls
  // swept from the right end of every row and the bottom of every column.
  std::vector<Triangle> tris;
  auto flat = [&](Vertex v) {
    tris.push_back({v, TriangleKind::A});
    tris.push_back({v, TriangleKind::B});
  };
  for (const Cell& c : cells_) flat({c.col - 1, c.row - 1});
  const Partition conj = mu.conjugate();
  for (int z = 0; z < kmax_; ++z) {
    for (int i = 1; i <= mu.length(); ++i) {
      const Vertex v{mu.row(i) + z, i + z};
      tris.push_back({v, TriangleKind::A});
      tris.push_back({v - kE2, TriangleKind::B});
    }
    for (int j = 1; j <= conj.length(); ++j) {
      const Vertex v{j - 1 + z, conj.row(j) + z};
      tris.push_back({v, TriangleKind::A});
      tris.push_back({v + kE1, TriangleKind::B});
    }
  }
  // Flat lozenges may only sit over cells of lambda.
  std::vector<Vertex> forbidden;
  for (const auto& t : tris) {
    if (t.kind == TriangleKind::A && !lam.contains({t.anchor.v + 1, t.anchor.u + 1})) {
      forbidden.push_back(t.anchor);
    }
  }
  region_ = std::make_shared<const Region>(tris, forbidden);
}

std::size_t SkewRegion::index(Cell c) const {
  if (!shape_.inner().contains(c)) throw OutOfDomain("cell is not in the inner shape");
  return row_start_[static_cast<std::size_t>(c.row - 1)] + static_cast<std::size_t>(c.col - 1);
}

bool SkewRegion::admissible(const Offsets& k) const {
  if (k.size() != cells_.size()) return false;
  const Partition& mu = shape_.inner();
  for (std::size_t n = 0; n < cells_.size(); ++n) {
    const Cell c = cells_[n];
    if (k[n] < 0 || k[n] > cap_[n]) return false;
    if (c.col > 1 && k[index({c.row, c.col - 1})] > k[n]) return false;
    if (c.row > 1 && k[index({c.row - 1, c.col})] > k[n]) return false;
  }
  (void)mu;
  return true;
}

Offsets SkewRegion::highest() const {
  Offsets k(cap_);
  for (std::size_t n = cells_.size(); n-- > 0;) {
    const Cell c = cells_[n];
    if (shape_.inner().contains({c.row, c.col + 1})) k[n] = std::min(k[n], k[index({c.row, c.col + 1})]);
    if (shape_.inner().contains({c.row + 1, c.col})) k[n] = std::min(k[n], k[index({c.row + 1, c.col})]);
  }
  return k;
}

std::vector<Cell> SkewRegion::excited_cells(const Offsets& k) const {
  std::vector<Cell> out;
  out.reserve(cells_.size());
  for (std::size_t n = 0; n < cells_.size(); ++n) {
    out.push_back({cells_[n].row + k[n], cells_[n].col + k[n]});
  }
  std::sort(out.begin(), out.end());
  return out;
}

HeightFunction SkewRegion::heights(const Offsets& k) const {
  if (!admissible(k)) throw InvalidArgument("offsets are not admissible for this shape");
  const Partition& mu = shape_.inner();
  // Offsets extended to the whole quadrant: 0 above or left of the diagram,
  // kmax on cells to the lower right of mu.
  auto ext = [&](int i, int j) {
    if (i <= 0 || j <= 0) return 0;
    if (!mu.contains({i, j})) return kmax_;
    return k[index({i, j})];
  };
  HeightFunction h(region_, 0);
  for (Vertex p : region_->vertices()) {
    int z = 0;
    for (; z <= kmax_; ++z) {
      if (ext(p.v - z, p.u - z) <= z && z <= ext(p.v - z + 1, p.u - z + 1)) break;
    }
    h.set(p, std::min(z, kmax_));
  }
  return h;
}

Offsets SkewRegion::offsets(const HeightFunction& h) const {
  Tiling t = heights_to_tiling(h);
  Offsets k(cells_.size(), -1);
  const int base = h.at(region_->vertices().front()) - heights(lowest()).at(region_->vertices().front());
  for (const Lozenge& z : t) {
    if (z.type != 3) continue;
    const int level = h.at(z.anchor) - base;
    const Cell c{z.anchor.v - level + 1, z.anchor.u - level + 1};
    if (!shape_.inner().contains(c) || k[index(c)] != -1) {
      throw InvalidHeight("flat lozenge does not come from a cell of the inner shape");
    }
    k[index(c)] = level;
  }
  if (!admissible(k)) throw InvalidHeight("height function is not an excited diagram");
  return k;
}

std::vector<PartialHeight> skew_boundary(const SkewRegion& sr) {
  return boundary_values(sr.heights(sr.lowest()));
}

BigCount count_excited(const SkewRegion& sr) {
  return sum_over_offsets<BigCount>(sr, BigCount(1), [](Cell, int) { return BigCount(1); });
}

std::vector<Offsets> enumerate_offsets(const SkewRegion& sr, long long limit) {
  const BigCount total = count_excited(sr);
  if (total > limit) {
    throw ResourceGuard("shape has " + total.str() + " excited diagrams, above the enumeration limit of " +
                        std::to_string(limit) + "; use the sampler instead");
  }
  const auto& cells = sr.cells();
  const Partition& mu = sr.shape().inner();
  std::vector<Offsets> out;
  out.reserve(total.convert_to<std::size_t>());
  Offsets k(cells.size(), 0);
  auto rec = [&](auto&& self, std::size_t n) -> void {
    if (n == cells.size()) {
      out.push_back(k);
      return;
    }
    const Cell c = cells[n];
    int lo = 0;
    if (c.col > 1) lo = std::max(lo, k[n - 1]);
    if (c.row > 1) lo = std::max(lo, k[sr.index({c.row - 1, c.col})]);
    for (int v = lo; v <= sr.cap(c); ++v) {
      k[n] = v;
      self(self, n + 1);
    }
  };
  (void)mu;
  rec(rec, 0);
  return out;
}

std::vector<HeightFunction> enumerate_H(const SkewShape& shape, long long limit) {
  SkewRegion sr(shape);
  std::vector<HeightFunction> out;
  for (const auto& k : enumerate_offsets(sr, limit)) out.push_back(sr.heights(k));
  return out;
}

std::vector<Tiling> enumerate_tilings_dfs(const Region& region, long long limit) {
  std::vector<Triangle> tris = region.triangles();
  std::vector<std::uint8_t> used(region.box_size(), 0);  // bit 1 = A, bit 2 = B
  auto is_used = [&](const Triangle& t) {
    return (used[region.index(t.anchor)] & (t.kind == TriangleKind::A ? 1 : 2)) != 0;
  };
  auto mark = [&](const Triangle& t, bool on) {
    const std::uint8_t bit = t.kind == TriangleKind::A ? 1 : 2;
    auto& u = used[region.index(t.anchor)];
    u = on ? (u | bit) : (u & ~bit);
  };
  std::vector<Tiling> out;
  Tiling cur;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    while (from < tris.size() && is_used(tris[from])) ++from;
    if (from == tris.size()) {
      if (static_cast<long long>(out.size()) >= limit) throw ResourceGuard("too many tilings");
      Tiling t = cur;
      std::sort(t.begin(), t.end());
      out.push_back(std::move(t));
      return;
    }
    const Triangle t = tris[from];
    for (int type = 1; type <= 3; ++type) {
      Triangle a, b;
      if (t.kind == TriangleKind::A) {
        a = t;
        b = {type == 3 ? t.anchor : (type == 1 ? t.anchor - kE2 : t.anchor + kE1), TriangleKind::B};
      } else {
        b = t;
        a = {type == 3 ? t.anchor : (type == 1 ? t.anchor + kE2 : t.anchor - kE1), TriangleKind::A};
      }
      if (!region.has(a) || !region.has(b) || is_used(a) || is_used(b)) continue;
      if (type == 3 && region.flat_forbidden(a.anchor)) continue;
      mark(a, true);
      mark(b, true);
      cur.push_back({type, a.anchor});
      self(self, from + 1);
      cur.pop_back();
      mark(a, false);
      mark(b, false);
    }
  };
  if (!tris.empty()) rec(rec, 0);
  else out.push_back({});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace skewtab
