#pragma once

// Exact counts of standard Young tableaux of skew shape and of boxed plane
// partitions. All results are arbitrary-precision integers.

#include <boost/multiprecision/cpp_int.hpp>

#include "skewtab/shapes.hpp"

namespace skewtab {

using BigCount = boost::multiprecision::cpp_int;

/// Raised when an exact computation would exceed its size guard.
class ResourceGuard : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

BigCount factorial(int n);
/// Phi(n) = 1! 2! ... (n-1)!, with Phi(0) = Phi(1) = 1.
BigCount superfactorial(int n);

/// |lambda|! / prod of hooks.
BigCount count_hlf(const Partition& lambda);
/// N! det[1/(lambda_i - mu_j - i + j)!] via fraction-free elimination.
BigCount count_determinant(const SkewShape& shape);

inline constexpr long long kBruteForceLimit = 25;
/// Linear extensions counted by a DP over intermediate partitions. Refuses
/// shapes with more than kBruteForceLimit cells.
BigCount count_brute_force(const SkewShape& shape);

/// Closed form for (a+c)^(b+c) / a^b.
BigCount count_thick_hook(int a, int b, int c);
/// Plane partitions in an a x b x c box (tilings of the hexagon H(a,b,c)).
BigCount macmahon(int a, int b, int c);

/// Natural log of a positive big integer, accurate for values far beyond
/// double range.
double log_big(const BigCount& x);

}  // namespace skewtab
