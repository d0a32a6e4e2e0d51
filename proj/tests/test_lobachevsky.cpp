#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "skewtab/lobachevsky.hpp"

using namespace skewtab;

TEST_CASE("Lobachevsky function against quadrature") {
  for (int i = 0; i <= 40; ++i) {
    const double x = M_PI * i / 40.0;
    CHECK(lobachevsky(x) == doctest::Approx(oracle::lobachevsky(x)).epsilon(1e-12).scale(1.0));
  }
  CHECK(lobachevsky(0.0) == 0.0);
  CHECK(std::abs(lobachevsky(M_PI)) < 1e-13);
  CHECK(std::abs(lobachevsky(M_PI / 2)) < 1e-13);
  // maximum at pi/6
  CHECK(lobachevsky_derivative(M_PI / 6) == doctest::Approx(0.0).scale(1.0));
  CHECK_THROWS_AS(lobachevsky(-0.1), OutOfDomain);
  CHECK_THROWS_AS(lobachevsky(3.5), OutOfDomain);
}

TEST_CASE("Clausen function identities") {
  for (double x : {0.3, 1.0, 2.2, 3.0}) {
    CHECK(clausen2(2 * M_PI - x) == doctest::Approx(-clausen2(x)).scale(1.0));
    CHECK(clausen2(x + 2 * M_PI) == doctest::Approx(clausen2(x)).scale(1.0));
    CHECK(clausen2(-x) == doctest::Approx(-clausen2(x)).scale(1.0));
    // duplication: Cl2(2x) = 2 Cl2(x) - 2 Cl2(pi - x)
    CHECK(clausen2(2 * x) == doctest::Approx(2 * clausen2(x) - 2 * clausen2(M_PI - x)).scale(1.0));
  }
  // Catalan's constant
  CHECK(clausen2(M_PI / 2) == doctest::Approx(0.915965594177219).epsilon(1e-14));
}

TEST_CASE("sigma against quadrature and its symmetries") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    double s = u(rng), t = u(rng);
    if (s + t > 1.0) {
      s = 1.0 - s;
      t = 1.0 - t;
    }
    const double r = 1.0 - s - t;
    if (i < 20) CHECK(sigma(s, t) == doctest::Approx(oracle::sigma(s, t)).epsilon(1e-11).scale(1.0));
    CHECK(sigma(s, t) == doctest::Approx(sigma(t, s)).scale(1.0));
    CHECK(sigma(s, t) == doctest::Approx(sigma(r, t)).scale(1.0));
    CHECK(sigma(s, t) == doctest::Approx(sigma(s, r)).scale(1.0));
    CHECK(sigma(s, t) >= -1e-15);
    CHECK(sigma(s, t) <= sigma_max() + 1e-15);
  }
  CHECK(sigma(1.0, 0.0) == doctest::Approx(0.0).scale(1.0));
  CHECK(sigma_max() == doctest::Approx(3.0 * oracle::lobachevsky(M_PI / 3) / M_PI).epsilon(1e-12));
  CHECK_THROWS_AS(sigma(0.8, 0.5), OutOfDomain);
  CHECK_THROWS_AS(sigma(-0.1, 0.5), OutOfDomain);
}

TEST_CASE("sigma is concave on the slope triangle") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto point = [&] {
    double s = u(rng), t = u(rng);
    if (s + t > 1.0) {
      s = 1.0 - s;
      t = 1.0 - t;
    }
    return std::array<double, 2>{s, t};
  };
  int bad = 0;
  for (int i = 0; i < 10000; ++i) {
    const auto a = point(), b = point();
    const double mid = sigma(0.5 * (a[0] + b[0]), 0.5 * (a[1] + b[1]));
    if (mid < 0.5 * (sigma(a[0], a[1]) + sigma(b[0], b[1])) - 1e-12) ++bad;
  }
  CHECK(bad == 0);
}

TEST_CASE("derivatives match finite differences") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.05, 0.9);
  const double h = 1e-5;
  int checked = 0;
  while (checked < 300) {
    const double s = u(rng), t = u(rng);
    if (s + t > 0.95) continue;
    ++checked;
    const auto d = sigma_derivatives(s, t);
    CHECK(d.value == doctest::Approx(sigma(s, t)).epsilon(1e-14));
    const double gs = (sigma(s + h, t) - sigma(s - h, t)) / (2 * h);
    const double gt = (sigma(s, t + h) - sigma(s, t - h)) / (2 * h);
    CHECK(std::abs(d.grad[0] - gs) <= 1e-6 * std::max(1.0, std::abs(gs)));
    CHECK(std::abs(d.grad[1] - gt) <= 1e-6 * std::max(1.0, std::abs(gt)));
    auto grad = [&](double a, double b) { return sigma_derivatives(a, b).grad; };
    const double hss = (grad(s + h, t)[0] - grad(s - h, t)[0]) / (2 * h);
    const double hst = (grad(s, t + h)[0] - grad(s, t - h)[0]) / (2 * h);
    const double htt = (grad(s, t + h)[1] - grad(s, t - h)[1]) / (2 * h);
    CHECK(std::abs(d.hess[0] - hss) <= 1e-6 * std::max(1.0, std::abs(hss)));
    CHECK(std::abs(d.hess[1] - hst) <= 1e-6 * std::max(1.0, std::abs(hst)));
    CHECK(std::abs(d.hess[2] - htt) <= 1e-6 * std::max(1.0, std::abs(htt)));
    // negative definite Hessian
    CHECK(d.hess[0] < 0.0);
    CHECK(d.hess[0] * d.hess[2] - d.hess[1] * d.hess[1] > 0.0);
  }
  const auto c = sigma_derivatives(1.0 / 3, 1.0 / 3);
  CHECK(std::abs(c.grad[0]) < 1e-12);
  CHECK(std::abs(c.grad[1]) < 1e-12);
}
