#pragma once

// Lobachevsky function and the lozenge entropy sigma(s, t).

#include <array>

namespace skewtab {

/// Clausen function Cl2(theta) = -int_0^theta log|2 sin(t/2)| dt, any real theta.
double clausen2(double theta);
/// Lambda(theta) = -int_0^theta log|2 sin t| dt = Cl2(2 theta) / 2, theta in [0, pi].
double lobachevsky(double theta);
/// Lambda'(theta) = -log|2 sin theta|.
double lobachevsky_derivative(double theta);

/// Entropy per lozenge at slope (s, t): (Lambda(pi s) + Lambda(pi t) +
/// Lambda(pi (1-s-t))) / pi. Defined on the closed triangle s, t, 1-s-t >= 0.
double sigma(double s, double t);

struct SigmaDerivatives {
  double value = 0.0;
  std::array<double, 2> grad{};     // d/ds, d/dt
  std::array<double, 3> hess{};     // ss, st, tt
};

/// Value, gradient and Hessian; slopes closer than `floor` to the triangle's
/// edges are clamped for the derivative terms, which diverge there.
SigmaDerivatives sigma_derivatives(double s, double t, double floor = 1e-12);

/// sigma at the center of the slope triangle, the maximum entropy per lozenge.
double sigma_max();

}  // namespace skewtab
