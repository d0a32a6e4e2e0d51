#include "skewtab/lattice.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace skewtab {

namespace {

std::array<Vertex, 3> corners(const Triangle& t) {
  if (t.kind == TriangleKind::A) return {t.anchor, t.anchor + kE1, t.anchor + kDiag};
  return {t.anchor, t.anchor + kE2, t.anchor + kDiag};
}

std::string describe(Vertex a, Vertex b) {
  std::ostringstream os;
  os << "(" << a.u << "," << a.v << ")->(" << b.u << "," << b.v << ")";
  return os.str();
}

}  // namespace

Region::Region(std::span<const Triangle> triangles, std::span<const Vertex> forbidden_flat) {
  if (triangles.empty()) {
    width_ = height_ = 1;
    cell_.assign(1, kVertex);
    vertices_.push_back({0, 0});
    return;
  }
  int umax = INT_MIN, vmax = INT_MIN;
  umin_ = vmin_ = INT_MAX;
  for (const auto& t : triangles) {
    for (Vertex p : corners(t)) {
      umin_ = std::min(umin_, p.u);
      vmin_ = std::min(vmin_, p.v);
      umax = std::max(umax, p.u);
      vmax = std::max(vmax, p.v);
    }
  }
  width_ = umax - umin_ + 1;
  height_ = vmax - vmin_ + 1;
  cell_.assign(box_size(), 0);
  for (const auto& t : triangles) {
    auto& f = cell_[index(t.anchor)];
    const std::uint8_t bit = t.kind == TriangleKind::A ? kA : kB;
    if (f & bit) continue;
    f |= bit;
    (t.kind == TriangleKind::A ? n_a_ : n_b_)++;
    for (Vertex p : corners(t)) cell_[index(p)] |= kVertex;
  }
  for (Vertex p : forbidden_flat) {
    if (in_box(p)) cell_[index(p)] |= kForbid;
  }
  for (int v = vmin_; v < vmin_ + height_; ++v) {
    for (int u = umin_; u < umin_ + width_; ++u) {
      const Vertex p{u, v};
      if (!(cell_[index(p)] & kVertex)) continue;
      vertices_.push_back(p);
      const bool inner = has_a(p) && has_b(p) && has_a(p - kE1) && has_b(p - kE2) &&
                         has_a(p - kDiag) && has_b(p - kDiag);
      if (inner) {
        cell_[index(p)] |= kInterior;
        interior_.push_back(p);
      }
    }
  }
}

bool Region::has(const Triangle& t) const {
  return (flags(t.anchor) & (t.kind == TriangleKind::A ? kA : kB)) != 0;
}
bool Region::contains(Vertex v) const { return (flags(v) & kVertex) != 0; }
bool Region::interior(Vertex v) const { return (flags(v) & kInterior) != 0; }
bool Region::flat_forbidden(Vertex anchor) const { return (flags(anchor) & kForbid) != 0; }

std::vector<Vertex> Region::boundary_vertices() const {
  std::vector<Vertex> out;
  for (Vertex p : vertices_) {
    if (!interior(p)) out.push_back(p);
  }
  return out;
}

std::vector<Triangle> Region::triangles() const {
  std::vector<Triangle> out;
  for (int v = vmin_; v < vmin_ + height_; ++v) {
    for (int u = umin_; u < umin_ + width_; ++u) {
      if (has_a({u, v})) out.push_back({{u, v}, TriangleKind::A});
      if (has_b({u, v})) out.push_back({{u, v}, TriangleKind::B});
    }
  }
  return out;
}

std::vector<std::vector<Vertex>> Region::boundary_cycles() const {
  if (triangle_count() == 0) return {vertices_};
  // Directed edges of every triangle in counterclockwise order; an edge whose
  // reverse is absent lies on the boundary with the region on its left.
  std::set<std::pair<Vertex, Vertex>> edges;
  for (const auto& t : triangles()) {
    const Vertex p = t.anchor;
    if (t.kind == TriangleKind::A) {
      edges.insert({p, p + kE1});
      edges.insert({p + kE1, p + kDiag});
      edges.insert({p + kDiag, p});
    } else {
      edges.insert({p, p + kDiag});
      edges.insert({p + kDiag, p + kE2});
      edges.insert({p + kE2, p});
    }
  }
  std::map<Vertex, std::vector<Vertex>> out;
  for (const auto& [a, b] : edges) {
    if (!edges.contains({b, a})) out[a].push_back(b);
  }
  std::vector<std::vector<Vertex>> cycles;
  while (true) {
    auto it = std::find_if(out.begin(), out.end(), [](const auto& kv) { return !kv.second.empty(); });
    if (it == out.end()) break;
    std::vector<Vertex> cycle;
    const Vertex start = it->first;
    Vertex cur = start;
    do {
      cycle.push_back(cur);
      auto& nexts = out[cur];
      if (nexts.empty()) break;
      const Vertex nxt = nexts.back();
      nexts.pop_back();
      cur = nxt;
    } while (cur != start);
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

// ---------------------------------------------------------------------------

HeightFunction::HeightFunction(std::shared_ptr<const Region> region, int fill)
    : region_(std::move(region)), h_(region_->box_size(), fill) {}

bool operator==(const HeightFunction& a, const HeightFunction& b) {
  if (a.region_ != b.region_) {
    if (!a.region_ || !b.region_) return false;
    if (a.region_->vertices() != b.region_->vertices()) return false;
  }
  for (Vertex p : a.region().vertices()) {
    if (a.at(p) != b.at(p)) return false;
  }
  return true;
}

namespace {

// Lozenge type of the A triangle at v, assuming the edge rule holds.
int a_type(const HeightFunction& h, Vertex v) {
  const int a = h.at(v + kE1) - h.at(v);
  const int b = h.at(v + kDiag) - h.at(v + kE1);
  return a == 1 ? 1 : (b == 1 ? 2 : 3);
}

int b_type(const HeightFunction& h, Vertex w) {
  const int p = h.at(w + kE2) - h.at(w);
  const int q = h.at(w + kDiag) - h.at(w + kE2);
  return p == 1 ? 2 : (q == 1 ? 1 : 3);
}

Vertex partner_of_a(Vertex v, int type) {
  return type == 3 ? v : (type == 1 ? v - kE2 : v + kE1);
}

Vertex partner_of_b(Vertex w, int type) {
  return type == 3 ? w : (type == 1 ? w + kE2 : w - kE1);
}

void check_edges(const HeightFunction& h) {
  const Region& r = h.region();
  auto check = [&](Vertex a, Vertex d, bool forced) {
    const int delta = h.at(a + d) - h.at(a);
    if (delta < 0 || delta > 1 || (forced && delta != 1)) {
      throw InvalidHeight("edge rule violated on edge " + describe(a, a + d));
    }
  };
  for (Vertex p : r.vertices()) {
    if (r.has_a(p) || r.has_b(p - kE2)) check(p, kE1, false);
    if (r.has_b(p) || r.has_a(p - kE1)) check(p, kE2, false);
    if (r.has_a(p) || r.has_b(p)) check(p, kDiag, r.has_a(p) && r.has_b(p) && r.flat_forbidden(p));
  }
}

Tiling build_tiling(const HeightFunction& h) {
  check_edges(h);
  const Region& r = h.region();
  Tiling out;
  out.reserve(r.a_count());
  for (Vertex p : r.vertices()) {
    if (r.has_a(p)) {
      const int t = a_type(h, p);
      if (!r.has_b(partner_of_a(p, t))) {
        throw InvalidHeight("lozenge at " + describe(p, p + kDiag) + " leaves the region");
      }
      out.push_back({t, p});
    }
    if (r.has_b(p)) {
      const int t = b_type(h, p);
      if (!r.has_a(partner_of_b(p, t))) {
        throw InvalidHeight("lozenge at " + describe(p, p + kDiag) + " leaves the region");
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

void HeightFunction::validate() const { (void)build_tiling(*this); }

bool HeightFunction::valid() const {
  try {
    validate();
    return true;
  } catch (const InvalidHeight&) {
    return false;
  }
}

Tiling heights_to_tiling(const HeightFunction& h) { return build_tiling(h); }

HeightFunction tiling_to_heights(const Tiling& tiling, std::shared_ptr<const Region> region, int base) {
  const Region& r = *region;
  // Known rise along e1, e2 and diagonal edges out of each vertex (-1 = unset).
  std::vector<std::array<int, 3>> rise(r.box_size(), {-1, -1, -1});
  std::vector<std::uint8_t> used(r.box_size(), 0);  // bit 1 = A, bit 2 = B
  auto assign = [&](Vertex p, int dir, int val) {
    if (!r.in_box(p)) throw InvalidHeight("lozenge outside region");
    int& slot = rise[r.index(p)][static_cast<std::size_t>(dir)];
    if (slot != -1 && slot != val) throw InvalidHeight("inconsistent lozenges at " + describe(p, p));
    slot = val;
  };
  auto cover = [&](Triangle t, int type) {
    if (!r.has(t)) throw InvalidHeight("lozenge covers a triangle outside the region");
    const std::uint8_t bit = t.kind == TriangleKind::A ? 1 : 2;
    auto& u = used[r.index(t.anchor)];
    if (u & bit) throw InvalidHeight("triangle covered twice");
    u |= bit;
    const int r1 = type == 1, r2 = type == 2, rd = type != 3;
    const Vertex p = t.anchor;
    if (t.kind == TriangleKind::A) {
      assign(p, 0, r1);
      assign(p + kE1, 1, r2);
    } else {
      assign(p, 1, r2);
      assign(p + kE2, 0, r1);
    }
    assign(p, 2, rd);
  };
  for (const Lozenge& z : tiling) {
    if (z.type < 1 || z.type > 3) throw InvalidHeight("lozenge type must be 1, 2 or 3");
    cover({z.anchor, TriangleKind::A}, z.type);
    const Vertex b = z.type == 3 ? z.anchor : (z.type == 1 ? z.anchor - kE2 : z.anchor + kE1);
    cover({b, TriangleKind::B}, z.type);
  }
  if (tiling.size() != r.a_count() || tiling.size() != r.b_count()) {
    throw InvalidHeight("lozenges do not cover the region");
  }
  HeightFunction h(region, 0);
  std::vector<std::uint8_t> seen(r.box_size(), 0);
  std::deque<Vertex> queue;
  const Vertex start = r.vertices().front();
  h.set(start, base);
  seen[r.index(start)] = 1;
  queue.push_back(start);
  const Vertex dirs[3] = {kE1, kE2, kDiag};
  while (!queue.empty()) {
    const Vertex p = queue.front();
    queue.pop_front();
    for (int d = 0; d < 3; ++d) {
      // forward edge p -> p + d
      const Vertex q = p + dirs[d];
      if (r.in_box(p) && rise[r.index(p)][static_cast<std::size_t>(d)] >= 0 && r.contains(q)) {
        const int val = h.at(p) + rise[r.index(p)][static_cast<std::size_t>(d)];
        if (!seen[r.index(q)]) {
          seen[r.index(q)] = 1;
          h.set(q, val);
          queue.push_back(q);
        } else if (h.at(q) != val) {
          throw InvalidHeight("lozenges give inconsistent heights at " + describe(p, q));
        }
      }
      // backward edge p - d -> p
      const Vertex s = p - dirs[d];
      if (r.in_box(s) && rise[r.index(s)][static_cast<std::size_t>(d)] >= 0 && r.contains(s)) {
        const int val = h.at(p) - rise[r.index(s)][static_cast<std::size_t>(d)];
        if (!seen[r.index(s)]) {
          seen[r.index(s)] = 1;
          h.set(s, val);
          queue.push_back(s);
        } else if (h.at(s) != val) {
          throw InvalidHeight("lozenges give inconsistent heights at " + describe(s, p));
        }
      }
    }
  }
  return h;
}

TypeCounts type_counts(const Tiling& t) {
  TypeCounts c;
  for (const auto& z : t) {
    (z.type == 1 ? c.type1 : z.type == 2 ? c.type2 : c.type3)++;
  }
  return c;
}

TypeCounts type_counts(const HeightFunction& h) { return type_counts(heights_to_tiling(h)); }

bool can_flip(const HeightFunction& h, Vertex p, int dir) {
  const Region& r = h.region();
  if (!r.interior(p) || (dir != 1 && dir != -1)) return false;
  const int hn = h.at(p) + dir;
  const Vertex dirs[3] = {kE1, kE2, kDiag};
  for (int d = 0; d < 3; ++d) {
    const int out = h.at(p + dirs[d]) - hn;
    const int in = hn - h.at(p - dirs[d]);
    if (out < 0 || out > 1 || in < 0 || in > 1) return false;
    if (d == 2) {
      if (out != 1 && r.flat_forbidden(p)) return false;
      if (in != 1 && r.flat_forbidden(p - kDiag)) return false;
    }
  }
  return true;
}

int flip_direction(const HeightFunction& h, Vertex p) {
  if (can_flip(h, p, 1)) return 1;
  if (can_flip(h, p, -1)) return -1;
  return 0;
}

int flip(HeightFunction& h, Vertex p) {
  const int dir = flip_direction(h, p);
  if (dir != 0) h.set(p, h.at(p) + dir);
  return dir;
}

// ---------------------------------------------------------------------------

namespace {

// Difference constraints h(to) - h(from) <= w on the region's edges.
struct Constraint {
  std::size_t from, to;
  int w;
};

std::vector<Constraint> region_constraints(const Region& r) {
  std::vector<Constraint> out;
  auto add = [&](Vertex a, Vertex d, bool forced) {
    const std::size_t ia = r.index(a), ib = r.index(a + d);
    out.push_back({ia, ib, 1});
    out.push_back({ib, ia, forced ? -1 : 0});
  };
  for (Vertex p : r.vertices()) {
    if (r.has_a(p) || r.has_b(p - kE2)) add(p, kE1, false);
    if (r.has_b(p) || r.has_a(p - kE1)) add(p, kE2, false);
    if (r.has_a(p) || r.has_b(p)) add(p, kDiag, r.has_a(p) && r.has_b(p) && r.flat_forbidden(p));
  }
  return out;
}

// Multi-source shortest paths with small integer weights; returns distances
// and the prescribed vertex each distance originates from.
HeightFunction shortest(std::span<const PartialHeight> partial, const std::shared_ptr<const Region>& region,
                        bool reversed) {
  const Region& r = *region;
  if (partial.empty()) throw InvalidArgument("extension needs at least one prescribed height");
  auto cons = region_constraints(r);
  std::vector<std::vector<std::pair<std::size_t, int>>> adj(r.box_size());
  for (const auto& c : cons) {
    if (reversed) {
      adj[c.to].push_back({c.from, c.w});
    } else {
      adj[c.from].push_back({c.to, c.w});
    }
  }
  constexpr long long kInf = LLONG_MAX / 4;
  std::vector<long long> dist(r.box_size(), kInf);
  std::vector<std::size_t> origin(r.box_size(), SIZE_MAX);
  std::vector<std::uint8_t> queued(r.box_size(), 0);
  std::vector<std::size_t> relax(r.box_size(), 0);
  std::deque<std::size_t> queue;
  std::vector<Vertex> at_index(r.box_size());
  for (Vertex p : r.vertices()) at_index[r.index(p)] = p;

  for (const auto& g : partial) {
    if (!r.contains(g.at)) throw InvalidArgument("prescribed vertex lies outside the region");
    const std::size_t i = r.index(g.at);
    const long long val = reversed ? -static_cast<long long>(g.value) : g.value;
    if (val < dist[i]) {
      dist[i] = val;
      origin[i] = i;
    }
    if (!queued[i]) {
      queued[i] = 1;
      queue.push_back(i);
    }
  }
  const std::size_t limit = r.vertices().size() + 2;
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    queued[i] = 0;
    for (auto [j, w] : adj[i]) {
      if (dist[i] + w < dist[j]) {
        dist[j] = dist[i] + w;
        origin[j] = origin[i];
        if (++relax[j] > limit) {
          throw ExtensionError("prescribed heights admit no extension", at_index[origin[i]], at_index[j]);
        }
        if (!queued[j]) {
          queued[j] = 1;
          queue.push_back(j);
        }
      }
    }
  }
  HeightFunction h(region, 0);
  for (Vertex p : r.vertices()) {
    const long long d = dist[r.index(p)];
    if (d >= kInf / 2) throw InvalidArgument("region is not connected to the prescribed vertices");
    h.set(p, static_cast<int>(reversed ? -d : d));
  }
  for (const auto& g : partial) {
    if (h.at(g.at) != g.value) {
      const Vertex from = at_index[origin[r.index(g.at)]];
      throw ExtensionError("prescribed heights violate the Lipschitz condition between " +
                               describe(reversed ? g.at : from, reversed ? from : g.at),
                           from, g.at);
    }
  }
  return h;
}

}  // namespace

HeightFunction extend_upper(std::span<const PartialHeight> partial, std::shared_ptr<const Region> region) {
  return shortest(partial, region, false);
}

HeightFunction extend_lower(std::span<const PartialHeight> partial, std::shared_ptr<const Region> region) {
  return shortest(partial, region, true);
}

std::vector<PartialHeight> boundary_values(const HeightFunction& h) {
  std::vector<PartialHeight> out;
  for (const auto& cycle : h.region().boundary_cycles()) {
    for (Vertex p : cycle) out.push_back({p, h.at(p)});
  }
  return out;
}

bool realizable(std::span<const PartialHeight> boundary, std::shared_ptr<const Region> region) {
  try {
    HeightFunction h = extend_upper(boundary, std::move(region));
    return h.valid();
  } catch (const ExtensionError&) {
    return false;
  }
}

}  // namespace skewtab
