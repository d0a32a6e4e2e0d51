#include "skewtab/varsolve.hpp"

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>
#include <algorithm>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>
#include <set>

#include "skewtab/exact_count.hpp"
#include "skewtab/lobachevsky.hpp"
#include "skewtab/nhlf.hpp"
#include "skewtab/rng.hpp"
#include "skewtab/skew_region.hpp"

namespace skewtab {

Functional uniform_functional() { return Functional{}; }

Functional build_functional(const StableProfile& profile, double eps) {
  if (!(eps > 0.0 && eps <= 1.0)) throw InvalidArgument("epsilon must lie in (0, 1]");
  Functional F;
  F.epsilon = eps;
  F.label = "hook_capped";
  const double floor_value = std::log(eps);
  F.rho = [profile, floor_value](double x1, double x2) -> std::array<double, 3> {
    const double x = x2, y = x1;
    double w = floor_value;
    if (profile.inside_outer(x, y)) {
      const double h = profile.hook(x, y);
      if (h > 0.0) w = std::max(w, std::log(h));
    }
    return {0.0, 0.0, w};
  };
  return F;
}

std::size_t MeshProfile::free_count() const {
  std::size_t n = 0;
  for (Vertex p : region->vertices()) n += fixed[region->index(p)] == 0;
  return n;
}

void MeshProfile::write_csv(std::ostream& os) const {
  os << "node_x,node_y,f\n";
  const auto old = os.precision(12);
  for (Vertex p : region->vertices()) os << p.u * ell << ',' << p.v * ell << ',' << at(p) << '\n';
  os.precision(old);
}

MeshProfile mesh_for_shape(const SkewShape& shape, double ell) {
  if (!(ell > 0.0)) throw InvalidArgument("mesh spacing must be positive");
  SkewRegion sr(shape);
  const auto boundary = skew_boundary(sr);
  const HeightFunction hi = extend_upper(boundary, sr.region());
  const HeightFunction lo = extend_lower(boundary, sr.region());
  MeshProfile m;
  m.region = sr.region();
  m.ell = ell;
  const std::size_t n = m.region->box_size();
  m.f.assign(n, 0.0);
  m.lower.assign(n, 0.0);
  m.upper.assign(n, 0.0);
  m.fixed.assign(n, 1);
  for (Vertex p : m.region->vertices()) {
    const std::size_t i = m.region->index(p);
    m.lower[i] = ell * lo.at(p);
    m.upper[i] = ell * hi.at(p);
    m.fixed[i] = lo.at(p) == hi.at(p);
    m.f[i] = m.lower[i];
  }
  return m;
}

MeshProfile mesh_for_profile(const StableProfile& profile, int mesh) {
  if (mesh < 2) throw InvalidArgument("mesh must be at least 2");
  return mesh_for_shape(stable_family(profile, static_cast<long long>(mesh) * mesh), 1.0 / mesh);
}

MeshProfile hexagon_mesh(int n) {
  if (n < 1) throw InvalidArgument("hexagon side must be positive");
  return mesh_for_shape(thick_hook(n, n, n), 1.0 / n);
}

// ---------------------------------------------------------------------------

namespace {

constexpr double kArea = 0.5;  // axial area of a unit triangle

// A triangle with the coefficients of s and t on its three nodes.
struct Tri {
  std::array<std::size_t, 3> node;
  std::array<double, 3> ds, dt;  // already divided by ell
  std::array<double, 3> rho;
  double area;
};

std::vector<Tri> build_triangles(const MeshProfile& m, const Functional& F) {
  std::vector<Tri> out;
  const Region& r = *m.region;
  const double il = 1.0 / m.ell;
  for (const Triangle& t : r.triangles()) {
    Tri tri;
    const Vertex v = t.anchor;
    double cx, cy;
    if (t.kind == TriangleKind::A) {
      tri.node = {r.index(v), r.index(v + kE1), r.index(v + kDiag)};
      tri.ds = {-il, il, 0.0};
      tri.dt = {0.0, -il, il};
      cx = v.u + 2.0 / 3.0;
      cy = v.v + 1.0 / 3.0;
    } else {
      tri.node = {r.index(v), r.index(v + kE2), r.index(v + kDiag)};
      tri.ds = {0.0, -il, il};
      tri.dt = {-il, il, 0.0};
      cx = v.u + 1.0 / 3.0;
      cy = v.v + 2.0 / 3.0;
    }
    tri.rho = F.at(cx * m.ell, cy * m.ell);
    tri.area = kArea * m.ell * m.ell;
    out.push_back(tri);
  }
  return out;
}

double dot3(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

std::array<double, 3> gather(const Tri& t, const std::vector<double>& f) {
  return {f[t.node[0]], f[t.node[1]], f[t.node[2]]};
}

}  // namespace

std::vector<std::array<double, 2>> slopes(const MeshProfile& m) {
  std::vector<std::array<double, 2>> out;
  for (const Tri& t : build_triangles(m, uniform_functional())) {
    const auto fv = gather(t, m.f);
    out.push_back({dot3(t.ds, fv), dot3(t.dt, fv)});
  }
  return out;
}

double evaluate_psi(const MeshProfile& m, const Functional& F, double slack) {
  double total = 0.0;
  for (const Tri& t : build_triangles(m, F)) {
    const auto fv = gather(t, m.f);
    const double s = dot3(t.ds, fv), u = dot3(t.dt, fv), r = 1.0 - s - u;
    if (s < -slack || u < -slack || r < -slack) throw InvalidArgument("profile slope leaves the lozenge triangle");
    const double sc = std::clamp(s, 0.0, 1.0), uc = std::clamp(u, 0.0, 1.0 - sc);
    total += t.area * (sigma(sc, uc) + t.rho[0] * s + t.rho[1] * u + t.rho[2] * r);
  }
  return total;
}

MeshProfile feasible_start(const MeshProfile& mesh, std::uint64_t seed) {
  MeshProfile m = mesh;
  const Region& r = *m.region;
  auto plane = [&](Vertex p) { return m.ell * (p.u + p.v) / 3.0; };
  double cmin = std::numeric_limits<double>::infinity(), cmax = -cmin;
  for (Vertex p : r.vertices()) {
    const std::size_t i = r.index(p);
    cmin = std::min(cmin, m.lower[i] - plane(p));
    cmax = std::max(cmax, m.upper[i] - plane(p));
  }
  constexpr int kLevels = 97;
  std::vector<double> weight(kLevels, 1.0);
  if (seed != 0) {
    SplitMix64 rng(seed);
    for (double& w : weight) w = 0.25 + rng.uniform();
  }
  const double wsum = std::accumulate(weight.begin(), weight.end(), 0.0);
  for (Vertex p : r.vertices()) {
    const std::size_t i = r.index(p);
    if (m.fixed[i]) {
      m.f[i] = m.lower[i];
      continue;
    }
    double acc = 0.0;
    for (int k = 0; k < kLevels; ++k) {
      const double c = cmin + (cmax - cmin) * (k + 0.5) / kLevels;
      acc += weight[static_cast<std::size_t>(k)] * std::clamp(c + plane(p), m.lower[i], m.upper[i]);
    }
    m.f[i] = acc / wsum;
  }
  return m;
}

namespace {

class BarrierProblem {
 public:
  BarrierProblem(const MeshProfile& m, const Functional& F) : mesh_(m), tris_(build_triangles(m, F)) {
    var_.assign(m.region->box_size(), -1);
    for (Vertex p : m.region->vertices()) {
      const std::size_t i = m.region->index(p);
      if (!m.fixed[i]) var_[i] = static_cast<int>(nvar_++);
    }
    // Which of s, t, r vary with the free nodes.
    active_.resize(tris_.size());
    for (std::size_t k = 0; k < tris_.size(); ++k) {
      const Tri& t = tris_[k];
      bool s = false, u = false, r = false;
      for (int j = 0; j < 3; ++j) {
        if (var_[t.node[static_cast<std::size_t>(j)]] < 0) continue;
        s |= t.ds[static_cast<std::size_t>(j)] != 0.0;
        u |= t.dt[static_cast<std::size_t>(j)] != 0.0;
        r |= (t.ds[static_cast<std::size_t>(j)] + t.dt[static_cast<std::size_t>(j)]) != 0.0;
      }
      active_[k] = {s, u, r};
      barrier_weight_ += t.area * (s + u + r);
    }
  }

  [[nodiscard]] std::size_t size() const { return nvar_; }
  [[nodiscard]] double barrier_weight() const { return barrier_weight_; }

  [[nodiscard]] Eigen::VectorXd pack(const std::vector<double>& f) const {
    Eigen::VectorXd x(static_cast<Eigen::Index>(nvar_));
    for (std::size_t i = 0; i < var_.size(); ++i) {
      if (var_[i] >= 0) x[var_[i]] = f[i];
    }
    return x;
  }
  void unpack(const Eigen::VectorXd& x, std::vector<double>& f) const {
    for (std::size_t i = 0; i < var_.size(); ++i) {
      if (var_[i] >= 0) f[i] = x[var_[i]];
    }
  }

  // Slacks of a triangle under f (s, t, r).
  [[nodiscard]] std::array<double, 3> slack(std::size_t k, const std::vector<double>& f) const {
    const auto fv = gather(tris_[k], f);
    const double s = dot3(tris_[k].ds, fv), u = dot3(tris_[k].dt, fv);
    return {s, u, 1.0 - s - u};
  }

  // Barrier objective; -inf when a varying slack is not positive.
  [[nodiscard]] double value(const std::vector<double>& f, double mu, double* psi_out = nullptr) const {
    double psi = 0.0, bar = 0.0;
    for (std::size_t k = 0; k < tris_.size(); ++k) {
      const Tri& t = tris_[k];
      const auto sl = slack(k, f);
      for (int j = 0; j < 3; ++j) {
        if (active_[k][static_cast<std::size_t>(j)]) {
          if (!(sl[static_cast<std::size_t>(j)] > 0.0)) return -std::numeric_limits<double>::infinity();
          bar += t.area * std::log(sl[static_cast<std::size_t>(j)]);
        }
      }
      const double s = std::clamp(sl[0], 0.0, 1.0), u = std::clamp(sl[1], 0.0, 1.0 - s);
      psi += t.area * (sigma(s, u) + t.rho[0] * sl[0] + t.rho[1] * sl[1] + t.rho[2] * sl[2]);
    }
    if (psi_out) *psi_out = psi;
    return psi + mu * bar;
  }

  // Gradient and negated Hessian of the barrier objective.
  void derivatives(const std::vector<double>& f, double mu, Eigen::VectorXd& grad,
                   Eigen::SparseMatrix<double>& neg_hess) const {
    grad.setZero(static_cast<Eigen::Index>(nvar_));
    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(tris_.size() * 9);
    for (std::size_t k = 0; k < tris_.size(); ++k) {
      const Tri& t = tris_[k];
      const auto sl = slack(k, f);
      const SigmaDerivatives d = sigma_derivatives(sl[0], sl[1]);
      const auto& act = active_[k];
      // Local gradient/Hessian in (s, t) coordinates.
      double gs = d.grad[0] + t.rho[0] - t.rho[2];
      double gt = d.grad[1] + t.rho[1] - t.rho[2];
      double hss = d.hess[0], hst = d.hess[1], htt = d.hess[2];
      if (act[0]) {
        gs += mu / sl[0];
        hss -= mu / (sl[0] * sl[0]);
      }
      if (act[1]) {
        gt += mu / sl[1];
        htt -= mu / (sl[1] * sl[1]);
      }
      if (act[2]) {
        const double ir = mu / sl[2], ir2 = mu / (sl[2] * sl[2]);
        gs -= ir;
        gt -= ir;
        hss -= ir2;
        htt -= ir2;
        hst -= ir2;
      }
      for (std::size_t a = 0; a < 3; ++a) {
        const int va = var_[t.node[a]];
        if (va < 0) continue;
        grad[va] += t.area * (gs * t.ds[a] + gt * t.dt[a]);
        for (std::size_t b = 0; b < 3; ++b) {
          const int vb = var_[t.node[b]];
          if (vb < 0) continue;
          const double h = hss * t.ds[a] * t.ds[b] + hst * (t.ds[a] * t.dt[b] + t.dt[a] * t.ds[b]) +
                           htt * t.dt[a] * t.dt[b];
          trip.emplace_back(va, vb, -t.area * h);
        }
      }
    }
    neg_hess.resize(static_cast<Eigen::Index>(nvar_), static_cast<Eigen::Index>(nvar_));
    neg_hess.setFromTriplets(trip.begin(), trip.end());
  }

  // Largest step along d keeping every varying slack positive.
  [[nodiscard]] double max_step(const std::vector<double>& f, const std::vector<double>& d) const {
    double alpha = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < tris_.size(); ++k) {
      const auto sl = slack(k, f);
      const auto fd = gather(tris_[k], d);
      const double ds = dot3(tris_[k].ds, fd), dt = dot3(tris_[k].dt, fd);
      const std::array<double, 3> rate{ds, dt, -ds - dt};
      for (std::size_t j = 0; j < 3; ++j) {
        if (active_[k][j] && rate[j] < 0.0) alpha = std::min(alpha, -sl[j] / rate[j]);
      }
    }
    return alpha;
  }

  // Checks constant slacks and strict feasibility of varying ones.
  void check_feasible(const std::vector<double>& f) const {
    for (std::size_t k = 0; k < tris_.size(); ++k) {
      const auto sl = slack(k, f);
      for (std::size_t j = 0; j < 3; ++j) {
        if (active_[k][j] ? !(sl[j] > 0.0) : sl[j] < -1e-9) {
          throw InvalidArgument("boundary data admit no strictly feasible profile");
        }
      }
    }
  }

 private:
  const MeshProfile& mesh_;
  std::vector<Tri> tris_;
  std::vector<int> var_;
  std::size_t nvar_ = 0;
  std::vector<std::array<bool, 3>> active_;
  double barrier_weight_ = 0.0;
};

SolveResult solve_from(const MeshProfile& start, const Functional& F, const SolveOptions& opt) {
  SolveResult res;
  res.profile = start;
  std::vector<double>& f = res.profile.f;
  BarrierProblem P(start, F);
  if (P.size() == 0) {
    res.psi = evaluate_psi(res.profile, F);
    res.converged = true;
    return res;
  }
  P.check_feasible(f);
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt;
  Eigen::VectorXd grad;
  Eigen::SparseMatrix<double> neg_hess;
  bool analyzed = false;
  std::vector<double> d(f.size(), 0.0), trial(f.size());
  double mu = opt.barrier_start;
  const double bw = P.barrier_weight();
  const double inner_tol = 0.1 * opt.tol;
  while (true) {
    bool centered = false;
    while (res.newton_steps < opt.max_newton) {
      P.derivatives(f, mu, grad, neg_hess);
      if (!analyzed) {
        ldlt.analyzePattern(neg_hess);
        analyzed = true;
      }
      ldlt.factorize(neg_hess);
      double shift = 0.0;
      while (ldlt.info() != Eigen::Success) {
        shift = shift == 0.0 ? 1e-10 : shift * 100.0;
        Eigen::SparseMatrix<double> I(neg_hess.rows(), neg_hess.cols());
        I.setIdentity();
        ldlt.factorize(neg_hess + shift * I);
        if (shift > 1e6) throw std::runtime_error("Newton system is singular");
      }
      const Eigen::VectorXd step = ldlt.solve(grad);
      ++res.newton_steps;
      const double decrement = grad.dot(step);
      res.kkt_residual = std::sqrt(std::max(decrement, 0.0));
      if (decrement / 2.0 <= inner_tol) {
        centered = true;
        break;
      }
      std::fill(d.begin(), d.end(), 0.0);
      P.unpack(step, d);
      double alpha = std::min(1.0, 0.99 * P.max_step(f, d));
      const double f0 = P.value(f, mu);
      while (true) {
        for (std::size_t i = 0; i < f.size(); ++i) trial[i] = f[i] + alpha * d[i];
        const double f1 = P.value(trial, mu);
        if (f1 >= f0 + 0.25 * alpha * decrement) break;
        alpha *= 0.5;
        if (alpha < 1e-14) break;
      }
      if (alpha < 1e-14) {
        centered = true;  // no further progress is possible at this barrier level
        break;
      }
      f.swap(trial);
    }
    if (!centered) break;
    res.barrier_gap = mu * bw + inner_tol;
    if (mu * bw <= 0.5 * opt.tol) {
      res.converged = true;
      break;
    }
    mu *= opt.barrier_factor;
  }
  res.barrier_gap = mu * bw + inner_tol;
  (void)P.value(f, 0.0, &res.psi);
  return res;
}

}  // namespace

SolveResult maximize(const MeshProfile& mesh, const Functional& F, const SolveOptions& opt) {
  SolveResult best = solve_from(feasible_start(mesh, 0), F, opt);
  best.restart_psi.push_back(best.psi);
  for (int r = 1; r <= opt.restarts; ++r) {
    SolveResult alt = solve_from(feasible_start(mesh, opt.seed + static_cast<std::uint64_t>(r)), F, opt);
    best.restart_psi.push_back(alt.psi);
    if (alt.psi > best.psi) {
      alt.restart_psi = std::move(best.restart_psi);
      best = std::move(alt);
    }
  }
  return best;
}

// ---------------------------------------------------------------------------

Integral log_hook_integral(const StableProfile& profile) {
  const PiecewiseLinear& psi = profile.psi();
  std::set<double> xs, ys;
  for (const auto& [x, y] : psi.points()) {
    xs.insert(x);
    ys.insert(y);
  }
  boost::math::quadrature::tanh_sinh<double> integrator;
  Integral total;
  const std::vector<double> xb(xs.begin(), xs.end());
  for (std::size_t i = 0; i + 1 < xb.size(); ++i) {
    if (xb[i + 1] <= xb[i]) continue;
    auto inner = [&](double x) {
      const double top = psi(x);
      if (top <= 0.0) return 0.0;
      double acc = 0.0, lo = 0.0;
      std::vector<double> cuts;
      for (double y : ys) {
        if (y > 0.0 && y < top) cuts.push_back(y);
      }
      cuts.push_back(top);
      for (double hi : cuts) {
        if (hi > lo) {
          acc += integrator.integrate(
              [&](double y) {
                const double h = profile.hook(x, y);
                return h > 0.0 ? std::log(h) : 0.0;
              },
              lo, hi, 1e-10);
        }
        lo = hi;
      }
      return acc;
    };
    double err = 0.0;
    total.value += integrator.integrate(inner, xb[i], xb[i + 1], 1e-9, &err);
    total.error += err;
  }
  return total;
}

ConstantReport constant(const StableProfile& profile, int mesh, double eps, const SolveOptions& opt) {
  ConstantReport rep;
  rep.mesh = mesh;
  rep.epsilon = eps;
  const Functional F = build_functional(profile, eps);
  const SolveResult sol = maximize(mesh_for_profile(profile, mesh), F, opt);
  const Integral k = log_hook_integral(profile);
  rep.psi = sol.psi;
  rep.k = k.value;
  rep.quadrature_error = k.error;
  rep.optimizer_gap = sol.barrier_gap;
  rep.cap_bound = cap_bound(eps);
  rep.converged = sol.converged;
  rep.constant = sol.psi - k.value - 1.0;
  return rep;
}

double finite_constant(const SkewShape& shape) {
  const double n = static_cast<double>(shape.size());
  if (n <= 0) throw InvalidArgument("finite constant needs a nonempty shape");
  return (log_big(count_determinant(shape)) - 0.5 * n * std::log(n)) / n;
}

std::vector<double> finite_n_constant(const std::function<SkewShape(long long)>& family,
                                      const std::vector<long long>& n_list) {
  std::vector<double> out;
  for (long long n : n_list) out.push_back(finite_constant(family(n)));
  return out;
}

double thick_hook_constant(double alpha, double beta) {
  if (alpha < 0.0 || beta < 0.0) throw InvalidArgument("thick hook ratios must be nonnegative");
  auto q = [](double k) { return k > 0.0 ? k * k * std::log(k) : 0.0; };
  const double s = alpha + beta + 1.0;
  const double quad = q(alpha) + q(beta) + 2.0 * q(s) - q(alpha + beta) - q(alpha + 1.0) - q(beta + 1.0) -
                      q(alpha + beta + 2.0);
  return 0.5 * std::log(s) + 0.5 + 0.5 * quad / s;
}

double extrapolate(const std::vector<double>& n, const std::vector<double>& y,
                   const std::vector<std::function<double(double)>>& basis) {
  const auto rows = static_cast<Eigen::Index>(n.size());
  const auto cols = static_cast<Eigen::Index>(basis.size() + 1);
  if (rows < cols) throw InvalidArgument("not enough points to extrapolate");
  Eigen::MatrixXd A(rows, cols);
  Eigen::VectorXd b(rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    A(i, 0) = 1.0;
    for (Eigen::Index j = 1; j < cols; ++j) A(i, j) = basis[static_cast<std::size_t>(j - 1)](n[static_cast<std::size_t>(i)]);
    b[i] = y[static_cast<std::size_t>(i)];
  }
  const Eigen::VectorXd coef = A.colPivHouseholderQr().solve(b);
  return coef[0];
}

}  // namespace skewtab
