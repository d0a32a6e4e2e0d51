#include <doctest.h>

#include <cmath>

#include <functional>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "skewtab/exact_count.hpp"
#include "skewtab/varsolve.hpp"

using namespace skewtab;

namespace {

// int_lo^hi log(c - y) dy in closed form.
double log_strip(double c, double lo, double hi) {
  auto F = [](double u) { return u > 0.0 ? u * std::log(u) - u : 0.0; };
  return F(c - lo) - F(c - hi);
}

double outer(const std::function<double(double)>& g, double a, double b) {
  boost::math::quadrature::tanh_sinh<double> q;
  return q.integrate(g, a, b);
}

}  // namespace

TEST_CASE("log-hook integral against direct quadrature") {
  CHECK(log_hook_integral(square_profile()).value == doctest::Approx(2 * std::log(2.0) - 1.5).epsilon(1e-10));

  // the integral runs over the whole outer diagram: for alpha = beta = 1 a
  // square of side 2, scaled by 1/sqrt 3
  const double L = 2.0 / std::sqrt(3.0);
  const double k_thick = outer([&](double x) { return log_strip(2 * L - x, 0.0, L); }, 0.0, L);
  CHECK(log_hook_integral(thick_hook_profile(1, 1)).value == doctest::Approx(k_thick).epsilon(1e-9));

  // ribbon: outer staircase y < 2s - x with hook 2 (2s - x - y)
  const double s = 1.0 / std::sqrt(1.5);
  auto strip = [&](double x, double lo, double hi) { return (hi - lo) * std::log(2.0) + log_strip(2 * s - x, lo, hi); };
  const double k_ribbon = outer([&](double x) { return strip(x, 0.0, 2 * s - x); }, 0.0, 2 * s);
  CHECK(log_hook_integral(thick_ribbon_profile()).value == doctest::Approx(k_ribbon).epsilon(1e-9));
}

TEST_CASE("analytic thick-hook constant") {
  CHECK(thick_hook_constant(1, 1) ==
        doctest::Approx(3.5 * std::log(3.0) - 22.0 / 3.0 * std::log(2.0) + 0.5).epsilon(1e-14));
  // finite sizes approach it with O(log N / N) corrections
  for (auto [a, b] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{1, 3}}) {
    std::vector<double> n, y;
    for (int c = 6; c <= 18; ++c) {
      const SkewShape s = thick_hook(a * c, b * c, c);
      n.push_back(double(s.size()));
      const double N = double(s.size());
      y.push_back((log_big(count_thick_hook(a * c, b * c, c)) - 0.5 * N * std::log(N)) / N);
    }
    const double fit = extrapolate(n, y, {[](double x) { return std::log(x) / x; }, [](double x) { return 1.0 / x; }});
    CHECK(fit == doctest::Approx(thick_hook_constant(a, b)).epsilon(1e-3));
  }
  CHECK_THROWS_AS(thick_hook_constant(-1, 1), InvalidArgument);
}

TEST_CASE("extrapolation recovers synthetic limits") {
  std::vector<double> n, y;
  for (int i = 10; i <= 40; ++i) {
    n.push_back(i);
    y.push_back(0.3 + 2.0 * std::log(i) / i - 5.0 / i);
  }
  const double fit = extrapolate(n, y, {[](double x) { return std::log(x) / x; }, [](double x) { return 1.0 / x; }});
  CHECK(fit == doctest::Approx(0.3).epsilon(1e-10));
}

TEST_CASE("hexagon mesh") {
  for (int n : {2, 4, 8}) {
    const MeshProfile m = hexagon_mesh(n);
    CHECK(m.free_count() == static_cast<std::size_t>(3 * n * n - 3 * n + 1));
    CHECK(m.ell == doctest::Approx(1.0 / n));
    for (Vertex p : m.region->vertices()) {
      const auto i = m.region->index(p);
      CHECK(m.lower[i] <= m.upper[i] + 1e-15);
      CHECK(bool(m.fixed[i]) == (m.lower[i] == m.upper[i]));
    }
    // the extremal profiles are frozen
    MeshProfile lo = m;
    lo.f = m.lower;
    CHECK(evaluate_psi(lo, uniform_functional()) == doctest::Approx(0.0).scale(1.0));
  }
}

TEST_CASE("maximizer of the uniform hexagon") {
  const MeshProfile m = hexagon_mesh(8);
  SolveOptions opt;
  opt.restarts = 2;
  const SolveResult r = maximize(m, uniform_functional(), opt);
  CHECK(r.converged);
  REQUIRE(r.restart_psi.size() == 3);
  for (double p : r.restart_psi) CHECK(p == doctest::Approx(r.psi).epsilon(1e-6));
  for (Vertex p : m.region->vertices()) {
    const auto i = m.region->index(p);
    CHECK(r.profile.f[i] >= m.lower[i] - 1e-12);
    CHECK(r.profile.f[i] <= m.upper[i] + 1e-12);
  }
  for (auto st : slopes(r.profile)) {
    CHECK(st[0] >= -1e-9);
    CHECK(st[1] >= -1e-9);
    CHECK(st[0] + st[1] <= 1 + 1e-9);
  }
  for (std::uint64_t seed : {1u, 2u, 3u})
    CHECK(evaluate_psi(feasible_start(m, seed), uniform_functional()) <= r.psi + 1e-12);

  // no feasible single-node move improves the objective beyond the gap
  const Functional F = uniform_functional();
  int moved = 0;
  for (Vertex p : m.region->interior_vertices()) {
    const auto i = m.region->index(p);
    if (m.fixed[i]) continue;
    for (double d : {1e-3, -1e-3}) {
      MeshProfile g = r.profile;
      g.f[i] += d * m.ell;
      bool ok = true;
      for (auto st : slopes(g)) ok = ok && st[0] >= 0 && st[1] >= 0 && st[0] + st[1] <= 1;
      if (!ok) continue;
      ++moved;
      CHECK(evaluate_psi(g, F) <= r.psi + r.barrier_gap + 1e-12);
    }
  }
  CHECK(moved > 0);

  // the objective increases with refinement toward the limit
  const double psi16 = maximize(hexagon_mesh(16), uniform_functional()).psi;
  CHECK(r.psi < psi16);
  CHECK(psi16 < 4.5 * std::log(3.0) - 6 * std::log(2.0));
}

TEST_CASE("constant for the square is exact") {
  const ConstantReport r = constant(square_profile(), 16, 0.05);
  CHECK(r.psi == 0.0);
  CHECK(r.constant == doctest::Approx(0.5 - 2 * std::log(2.0)).epsilon(1e-10));
  CHECK(r.cap_bound == doctest::Approx(0.05 * 0.05 * (1 - std::log(0.05))));
  CHECK_THROWS_AS(build_functional(square_profile(), 0.0), InvalidArgument);
}
