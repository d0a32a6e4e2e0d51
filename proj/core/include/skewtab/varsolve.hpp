#pragma once

// Discretized variational problem for weighted lozenge tilings.
//
// A profile f is piecewise linear on the triangles of a lattice region scaled
// by ell; on each triangle its slope (s, t) must satisfy s, t, 1-s-t >= 0 and
//   Psi(f) = sum over triangles of area * (sigma(s,t) + rho . (s, t, 1-s-t)),
// each unit triangle having area ell^2 / 2. Psi is concave; the solver
// maximizes it with a primal log-barrier Newton method.

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "skewtab/lattice.hpp"
#include "skewtab/shapes.hpp"

namespace skewtab {

/// Weight vector rho(x1, x2) for lozenge types (1, 2, 3) at a scaled axial
/// position. An empty function means rho = 0.
struct Functional {
  std::function<std::array<double, 3>(double x1, double x2)> rho;
  double epsilon = 0.0;
  std::string label = "uniform";

  [[nodiscard]] std::array<double, 3> at(double x1, double x2) const {
    return rho ? rho(x1, x2) : std::array<double, 3>{0.0, 0.0, 0.0};
  }
};

Functional uniform_functional();
/// Capped limiting hook field: rho_3 = max(log hbar, log eps) on the outer
/// diagram and log eps off it. Axial (x1, x2) corresponds to the Young
/// coordinates (row, col) = (x2, x1).
Functional build_functional(const StableProfile& profile, double eps);

struct MeshProfile {
  std::shared_ptr<const Region> region;
  double ell = 1.0;
  std::vector<double> f;            // indexed like the region's bounding box
  std::vector<double> lower, upper; // pointwise bounds from the boundary data
  std::vector<std::uint8_t> fixed;  // 1 where lower == upper

  [[nodiscard]] double at(Vertex p) const { return f[region->index(p)]; }
  [[nodiscard]] std::size_t free_count() const;
  /// CSV node_x,node_y,f in scaled axial coordinates.
  void write_csv(std::ostream& os) const;
};

/// Mesh over the tiling region of a skew shape, scaled by ell. Bounds come
/// from the largest and smallest height functions.
MeshProfile mesh_for_shape(const SkewShape& shape, double ell);
/// Mesh for a stable profile: the region of stable_family(profile, mesh^2)
/// scaled by 1/mesh.
MeshProfile mesh_for_profile(const StableProfile& profile, int mesh);
/// Regular hexagon H(n, n, n) scaled to side 1 (axial area 3).
MeshProfile hexagon_mesh(int n);

/// Psi(f); throws if a slope leaves the triangle by more than `slack`.
double evaluate_psi(const MeshProfile& f, const Functional& F, double slack = 1e-9);
/// Per-triangle slopes (s, t).
std::vector<std::array<double, 2>> slopes(const MeshProfile& f);

struct SolveOptions {
  double tol = 1e-6;          // target gap on the objective
  int max_newton = 400;       // total Newton iterations
  int restarts = 0;           // extra random feasible starts
  std::uint64_t seed = 1;
  double barrier_start = 1e-2;
  double barrier_factor = 0.2;
};

struct SolveResult {
  MeshProfile profile;
  double psi = 0.0;
  double kkt_residual = 0.0;   // gradient norm of the barrier problem at exit
  double barrier_gap = 0.0;    // bound on Psi(f_max) - Psi(f)
  int newton_steps = 0;
  bool converged = false;
  std::vector<double> restart_psi;  // objective of every restart
};

/// Strictly feasible starting profile: an average of clamped planes of slope
/// (1/3, 1/3) between the bounds. `seed` != 0 randomizes the averaging weights.
MeshProfile feasible_start(const MeshProfile& mesh, std::uint64_t seed = 0);

SolveResult maximize(const MeshProfile& mesh, const Functional& F, const SolveOptions& opt = {});

/// k(psi) = double integral over C(psi) of log hbar(x, y), with an error
/// estimate.
struct Integral {
  double value = 0.0;
  double error = 0.0;
};
Integral log_hook_integral(const StableProfile& profile);

struct ConstantReport {
  double constant = 0.0;  // Psi(f_max) - k(psi) - 1
  double psi = 0.0;
  double k = 0.0;
  double quadrature_error = 0.0;
  double optimizer_gap = 0.0;
  double cap_bound = 0.0;
  int mesh = 0;
  double epsilon = 0.0;
  bool converged = false;
};

/// Asymptotic constant c(psi/phi) = lim (log f - N log N / 2) / N.
ConstantReport constant(const StableProfile& profile, int mesh, double eps, const SolveOptions& opt = {});

/// (log f^{shape} - N log N / 2) / N from exact counts.
double finite_constant(const SkewShape& shape);
std::vector<double> finite_n_constant(const std::function<SkewShape(long long)>& family,
                                      const std::vector<long long>& n_list);

/// Closed-form limit of (log f - N log N / 2) / N for thick hooks with
/// a/c -> alpha, b/c -> beta, from the superfactorial product formula.
double thick_hook_constant(double alpha, double beta);

/// Least-squares fit of y = c + sum_j a_j g_j(n); returns c.
double extrapolate(const std::vector<double>& n, const std::vector<double>& y,
                   const std::vector<std::function<double(double)>>& basis);

}  // namespace skewtab
