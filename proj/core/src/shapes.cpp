#include "skewtab/shapes.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <limits>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace skewtab {

Partition::Partition(std::vector<int> parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw InvalidArgument("partition parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1]) {
      throw InvalidArgument("partition parts must be weakly decreasing");
    }
  }
  parts_ = std::move(parts);
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

int Partition::col(int col) const {
  if (col < 1) return 0;
  // Rows are decreasing, so the column length is the count of rows >= col.
  auto it = std::partition_point(parts_.begin(), parts_.end(), [col](int p) { return p >= col; });
  return static_cast<int>(it - parts_.begin());
}

bool Partition::contains(const Partition& other) const {
  if (other.length() > length()) return false;
  for (int i = 1; i <= other.length(); ++i) {
    if (other.row(i) > row(i)) return false;
  }
  return true;
}

Partition Partition::conjugate() const {
  std::vector<int> conj(parts_.empty() ? 0 : static_cast<std::size_t>(parts_.front()));
  for (std::size_t j = 0; j < conj.size(); ++j) conj[j] = col(static_cast<int>(j) + 1);
  return Partition(std::move(conj));
}

std::vector<Cell> Partition::cells() const {
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(size_));
  for (int i = 1; i <= length(); ++i) {
    for (int j = 1; j <= row(i); ++j) out.push_back({i, j});
  }
  return out;
}

Partition staircase(int n) {
  std::vector<int> parts;
  for (int i = n - 1; i >= 1; --i) parts.push_back(i);
  return Partition(std::move(parts));
}

Partition rectangle(int rows, int cols) {
  if (rows <= 0 || cols <= 0) return Partition{};
  return Partition(std::vector<int>(static_cast<std::size_t>(rows), cols));
}

bool is_connected(const Partition& outer, const Partition& inner) {
  std::vector<Cell> cells;
  for (const Cell& c : outer.cells()) {
    if (!inner.contains(c)) cells.push_back(c);
  }
  if (cells.empty()) return true;
  std::set<Cell> todo(cells.begin(), cells.end());
  std::queue<Cell> q;
  q.push(cells.front());
  todo.erase(cells.front());
  while (!q.empty()) {
    Cell c = q.front();
    q.pop();
    for (Cell n : {Cell{c.row + 1, c.col}, Cell{c.row - 1, c.col}, Cell{c.row, c.col + 1},
                   Cell{c.row, c.col - 1}}) {
      if (auto it = todo.find(n); it != todo.end()) {
        todo.erase(it);
        q.push(n);
      }
    }
  }
  return todo.empty();
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!outer_.contains(inner_)) throw InvalidArgument("inner partition is not contained in outer");
  if (!is_connected(outer_, inner_)) throw InvalidArgument("skew shape is not connected");
}

std::vector<Cell> SkewShape::cells() const {
  std::vector<Cell> out;
  for (const Cell& c : outer_.cells()) {
    if (!inner_.contains(c)) out.push_back(c);
  }
  return out;
}

SkewShape thick_hook(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 1) throw InvalidArgument("thick hook needs a,b >= 0 and c >= 1");
  return SkewShape(rectangle(b + c, a + c), rectangle(b, a));
}

SkewShape thick_ribbon(int k) {
  if (k < 1) throw InvalidArgument("thick ribbon needs k >= 1");
  return SkewShape(staircase(2 * k), staircase(k));
}

HookTable::HookTable(const Partition& lambda) : shape_(lambda) {
  const Partition conj = lambda.conjugate();
  row_offset_.resize(static_cast<std::size_t>(lambda.length()) + 1, 0);
  values_.reserve(static_cast<std::size_t>(lambda.size()));
  for (int x = 1; x <= lambda.length(); ++x) {
    row_offset_[static_cast<std::size_t>(x - 1)] = values_.size();
    for (int y = 1; y <= lambda.row(x); ++y) {
      values_.push_back(lambda.row(x) - y + conj.row(y) - x + 1);
    }
  }
  row_offset_.back() = values_.size();
}

int HookTable::at(Cell c) const {
  if (!shape_.contains(c)) {
    std::ostringstream os;
    os << "cell (" << c.row << "," << c.col << ") is outside the diagram";
    throw OutOfDomain(os.str());
  }
  return values_[row_offset_[static_cast<std::size_t>(c.row - 1)] + static_cast<std::size_t>(c.col - 1)];
}

HookTable hook_table(const Partition& lambda) { return HookTable(lambda); }

double scaled_hook(const Partition& lambda, double x, double y, long long n) {
  if (n < 1) throw InvalidArgument("scaled_hook needs N >= 1");
  const double root = std::sqrt(static_cast<double>(n));
  const Cell c{static_cast<int>(std::floor(x * root)) + 1, static_cast<int>(std::floor(y * root)) + 1};
  if (x < 0.0 || y < 0.0 || !lambda.contains(c)) {
    throw OutOfDomain("scaled_hook: point lies outside the diagram");
  }
  const Partition conj = lambda.conjugate();
  const int h = lambda.row(c.row) - c.col + conj.row(c.col) - c.row + 1;
  return h / root;
}

// ---------------------------------------------------------------------------

PiecewiseLinear::PiecewiseLinear(std::vector<std::pair<double, double>> points)
    : pts_(std::move(points)) {
  if (pts_.empty()) throw InvalidArgument("profile needs at least one breakpoint");
  if (pts_.front().first != 0.0) throw InvalidArgument("profile must start at x = 0");
  for (std::size_t i = 0; i < pts_.size(); ++i) {
    if (!std::isfinite(pts_[i].first) || !std::isfinite(pts_[i].second) || pts_[i].second < 0.0) {
      throw InvalidArgument("profile values must be finite and nonnegative");
    }
    if (i > 0) {
      if (pts_[i].first < pts_[i - 1].first) throw InvalidArgument("profile abscissae must not decrease");
      if (pts_[i].second > pts_[i - 1].second) throw InvalidArgument("profile must be non-increasing");
    }
  }
}

double PiecewiseLinear::operator()(double x) const {
  if (x < 0.0 || x > domain_end()) return 0.0;
  // Last segment whose left end is <= x; repeated abscissae resolve to the
  // right limit.
  auto it = std::upper_bound(pts_.begin(), pts_.end(), x,
                             [](double v, const auto& p) { return v < p.first; });
  if (it == pts_.end()) return pts_.back().second;
  auto prev = std::prev(it);
  const double dx = it->first - prev->first;
  if (dx <= 0.0) return it->second;
  const double t = (x - prev->first) / dx;
  return prev->second + t * (it->second - prev->second);
}

double PiecewiseLinear::inverse(double y) const {
  if (pts_.empty() || y >= pts_.front().second) return 0.0;
  for (std::size_t i = 1; i < pts_.size(); ++i) {
    const auto& a = pts_[i - 1];
    const auto& b = pts_[i];
    if (b.second <= y) {
      if (a.second == b.second || b.first == a.first) return a.first;
      return a.first + (a.second - y) / (a.second - b.second) * (b.first - a.first);
    }
  }
  return domain_end();
}

double PiecewiseLinear::integral() const {
  double area = 0.0;
  for (std::size_t i = 1; i < pts_.size(); ++i) {
    area += 0.5 * (pts_[i].first - pts_[i - 1].first) * (pts_[i].second + pts_[i - 1].second);
  }
  return area;
}

PiecewiseLinear PiecewiseLinear::scaled(double factor) const {
  auto pts = pts_;
  for (auto& [x, y] : pts) {
    x *= factor;
    y *= factor;
  }
  return PiecewiseLinear(std::move(pts));
}

StableProfile::StableProfile(PiecewiseLinear psi, PiecewiseLinear phi) {
  const double raw = psi.integral() - phi.integral();
  if (!(raw > 0.0)) throw InvalidArgument("profile area(psi/phi) must be positive");
  // psi >= phi on a fine grid covering both domains.
  const double end = std::max(psi.domain_end(), phi.domain_end());
  for (int i = 0; i <= 4096; ++i) {
    const double x = end * i / 4096.0;
    if (phi(x) > psi(x) + 1e-12) throw InvalidArgument("profile needs psi >= phi");
  }
  scale_ = 1.0 / std::sqrt(raw);
  psi_ = psi.scaled(scale_);
  phi_ = phi.scaled(scale_);
  area_ = psi_.integral() - phi_.integral();
  if (std::abs(area_ - 1.0) > 1e-9) throw InvalidArgument("profile normalization failed");
}

double StableProfile::hook(double x, double y) const {
  return (psi_(x) - y) + (psi_.inverse(y) - x);
}

bool StableProfile::inside_outer(double x, double y) const {
  return x >= 0.0 && y >= 0.0 && x < psi_.domain_end() && y < psi_(x);
}

StableProfile thick_hook_profile(double alpha, double beta) {
  // lambda = (a+c)^(b+c), mu = a^b with a = alpha c, b = beta c; rows are x.
  if (alpha < 0.0 || beta < 0.0) throw InvalidArgument("thick hook profile needs alpha, beta >= 0");
  const double rows = beta + 1.0;
  const double cols = alpha + 1.0;
  PiecewiseLinear psi({{0.0, cols}, {rows, cols}, {rows, 0.0}});
  PiecewiseLinear phi = (alpha > 0.0 && beta > 0.0)
                            ? PiecewiseLinear({{0.0, alpha}, {beta, alpha}, {beta, 0.0}})
                            : PiecewiseLinear({{0.0, 0.0}});
  return StableProfile(std::move(psi), std::move(phi));
}

StableProfile thick_ribbon_profile() {
  return StableProfile(PiecewiseLinear({{0.0, 2.0}, {2.0, 0.0}}),
                       PiecewiseLinear({{0.0, 1.0}, {1.0, 0.0}}));
}

StableProfile square_profile() {
  return StableProfile(PiecewiseLinear({{0.0, 1.0}, {1.0, 1.0}, {1.0, 0.0}}),
                       PiecewiseLinear({{0.0, 0.0}}));
}

namespace {

Partition round_curve(const PiecewiseLinear& f, double root) {
  std::vector<int> parts;
  int prev = std::numeric_limits<int>::max();
  for (int i = 1;; ++i) {
    const double x = i / root;
    if (x > f.domain_end() + 1e-9) break;
    // Row i covers ((i-1)/sqrt N, i/sqrt N], so jumps take the left limit.
    const double left = std::max(0.0, x - 1e-9 * (1.0 + x));
    int v = static_cast<int>(std::lround(root * f(left)));
    v = std::min(v, prev);  // monotonicity repair
    if (v <= 0) break;
    parts.push_back(v);
    prev = v;
  }
  return Partition(std::move(parts));
}

}  // namespace

SkewShape stable_family(const StableProfile& profile, long long n) {
  if (n < 1) throw InvalidArgument("stable_family needs N >= 1");
  const double root = std::sqrt(static_cast<double>(n));
  Partition outer = round_curve(profile.psi(), root);
  Partition inner = round_curve(profile.phi(), root);
  // Rounding can push an inner row past the outer one near shared corners.
  if (!outer.contains(inner)) {
    std::vector<int> parts(inner.parts().begin(), inner.parts().end());
    for (std::size_t i = 0; i < parts.size(); ++i) {
      parts[i] = std::min(parts[i], outer.row(static_cast<int>(i) + 1));
    }
    inner = Partition(std::move(parts));
  }
  return SkewShape(std::move(outer), std::move(inner));
}

double boundary_distance(const Partition& lambda, const PiecewiseLinear& psi, long long n) {
  const double root = std::sqrt(static_cast<double>(n));
  double worst = 0.0;
  const int rows = std::max(lambda.length(), static_cast<int>(std::ceil(psi.domain_end() * root)));
  for (int i = 1; i <= rows; ++i) {
    const double x = i / root;
    worst = std::max(worst, std::abs(lambda.row(i) / root - psi(std::min(x, psi.domain_end()))));
  }
  return worst;
}

}  // namespace skewtab
