#include "skewtab/lobachevsky.hpp"

#include <boost/math/special_functions/bernoulli.hpp>
#include <cmath>
#include <numbers>

#include "skewtab/shapes.hpp"

namespace skewtab {

namespace {

constexpr double kPi = std::numbers::pi;

// Cl2 on [0, pi] from its Bernoulli expansion; terms shrink by about 4x each.
double clausen_series(double x) {
  if (x == 0.0) return 0.0;
  double sum = x - x * std::log(x);
  const double x2 = x * x;
  double power = x;  // x^(2k+1)
  double fact = 1.0; // (2k+1)!
  for (int k = 1; k < 60; ++k) {
    power *= x2;
    fact *= (2.0 * k) * (2.0 * k + 1.0);
    const double term = std::abs(boost::math::bernoulli_b2n<double>(k)) * power / (2.0 * k * fact);
    sum += term;
    if (term < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

}  // namespace

double clausen2(double theta) {
  double x = std::fmod(theta, 2.0 * kPi);
  if (x < 0.0) x += 2.0 * kPi;
  if (x <= kPi) return clausen_series(x);
  return -clausen_series(2.0 * kPi - x);
}

double lobachevsky(double theta) {
  if (!(theta >= -1e-12 && theta <= kPi + 1e-12)) throw OutOfDomain("Lobachevsky argument outside [0, pi]");
  return 0.5 * clausen2(2.0 * theta);
}

double lobachevsky_derivative(double theta) { return -std::log(std::abs(2.0 * std::sin(theta))); }

double sigma(double s, double t) {
  const double r = 1.0 - s - t;
  constexpr double tol = 1e-12;
  if (s < -tol || t < -tol || r < -tol) throw OutOfDomain("slope outside the lozenge triangle");
  auto lob = [](double a) { return 0.5 * clausen2(2.0 * kPi * std::max(a, 0.0)); };
  return (lob(s) + lob(t) + lob(r)) / kPi;
}

SigmaDerivatives sigma_derivatives(double s, double t, double floor) {
  SigmaDerivatives d;
  d.value = sigma(std::max(s, 0.0), std::max(t, 0.0));
  const double sc = std::max(s, floor);
  const double tc = std::max(t, floor);
  const double rc = std::max(1.0 - s - t, floor);
  const double ls = std::sin(kPi * sc), lt = std::sin(kPi * tc), lr = std::sin(kPi * rc);
  d.grad = {std::log(lr / ls), std::log(lr / lt)};
  const double cs = std::cos(kPi * sc) / ls;
  const double ct = std::cos(kPi * tc) / lt;
  const double cr = std::cos(kPi * rc) / lr;
  d.hess = {-kPi * (cs + cr), -kPi * cr, -kPi * (ct + cr)};
  return d;
}

double sigma_max() { return 3.0 * lobachevsky(kPi / 3.0) / kPi; }

}  // namespace skewtab
