#include "skewtab/exact_count.hpp"

#include <cmath>
#include <map>
#include <vector>

namespace skewtab {

BigCount factorial(int n) {
  if (n < 0) throw InvalidArgument("factorial of a negative number");
  BigCount r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

BigCount superfactorial(int n) {
  if (n < 0) throw InvalidArgument("superfactorial of a negative number");
  BigCount r = 1;
  BigCount f = 1;  // (k-1)!
  for (int k = 2; k <= n; ++k) {
    f *= (k - 1);
    r *= f;
  }
  return r;
}

BigCount count_hlf(const Partition& lambda) {
  HookTable hooks(lambda);
  BigCount denom = 1;
  for (int h : hooks.values()) denom *= h;
  return factorial(static_cast<int>(lambda.size())) / denom;
}

namespace {

// Determinant of an integer matrix by Bareiss elimination; exact.
BigCount bareiss(std::vector<std::vector<BigCount>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  BigCount prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace

BigCount count_determinant(const SkewShape& shape) {
  const Partition& lam = shape.outer();
  const Partition& mu = shape.inner();
  const int n = lam.length();
  if (shape.size() == 0) return 1;
  // Row i is scaled by (lambda_i - i + n)!, turning each 1/(.)! entry into a
  // falling factorial.
  std::vector<std::vector<BigCount>> m(static_cast<std::size_t>(n),
                                       std::vector<BigCount>(static_cast<std::size_t>(n)));
  BigCount scale = 1;
  for (int i = 1; i <= n; ++i) {
    const int top = lam.row(i) - i + n;
    scale *= factorial(top);
    for (int j = 1; j <= n; ++j) {
      const int bottom = lam.row(i) - mu.row(j) - i + j;
      BigCount e = 0;
      if (bottom >= 0) {
        e = 1;
        for (int k = bottom + 1; k <= top; ++k) e *= k;
      }
      m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = e;
    }
  }
  return factorial(static_cast<int>(shape.size())) * bareiss(std::move(m)) / scale;
}

BigCount count_brute_force(const SkewShape& shape) {
  if (shape.size() > kBruteForceLimit) {
    throw ResourceGuard("brute-force count refuses shapes with more than " +
                        std::to_string(kBruteForceLimit) + " cells");
  }
  const Partition& lam = shape.outer();
  const int rows = lam.length();
  // Number of ways to grow from nu to lambda, one outer corner at a time.
  std::map<std::vector<int>, BigCount> memo;
  std::vector<int> start(static_cast<std::size_t>(rows), 0);
  for (int i = 1; i <= rows; ++i) start[static_cast<std::size_t>(i - 1)] = shape.inner().row(i);

  auto rec = [&](auto&& self, std::vector<int>& nu) -> BigCount {
    bool full = true;
    for (int i = 0; i < rows; ++i) {
      if (nu[static_cast<std::size_t>(i)] != lam.row(i + 1)) {
        full = false;
        break;
      }
    }
    if (full) return 1;
    if (auto it = memo.find(nu); it != memo.end()) return it->second;
    BigCount total = 0;
    for (int i = 0; i < rows; ++i) {
      auto& r = nu[static_cast<std::size_t>(i)];
      const bool fits = r < lam.row(i + 1) && (i == 0 || nu[static_cast<std::size_t>(i - 1)] > r);
      if (!fits) continue;
      ++r;
      total += self(self, nu);
      --r;
    }
    memo.emplace(nu, total);
    return total;
  };
  return rec(rec, start);
}

BigCount count_thick_hook(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 1) throw InvalidArgument("thick hook needs a,b >= 0 and c >= 1");
  const long long n = static_cast<long long>(a + c) * (b + c) - static_cast<long long>(a) * b;
  const BigCount c2 = superfactorial(c);
  const BigCount abc = superfactorial(a + b + c);
  const BigCount num = factorial(static_cast<int>(n)) * superfactorial(a) * superfactorial(b) *
                       c2 * c2 * abc * abc;
  const BigCount den = superfactorial(a + b) * superfactorial(a + c) * superfactorial(b + c) *
                       superfactorial(a + b + 2 * c);
  return num / den;
}

BigCount macmahon(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) throw InvalidArgument("macmahon needs a,b,c >= 0");
  return superfactorial(a) * superfactorial(b) * superfactorial(c) * superfactorial(a + b + c) /
         (superfactorial(a + b) * superfactorial(b + c) * superfactorial(a + c));
}

double log_big(const BigCount& x) {
  if (x <= 0) throw InvalidArgument("log of a nonpositive count");
  const auto bits = boost::multiprecision::msb(x);
  if (bits < 900) return std::log(x.convert_to<double>());
  const auto shift = bits - 60;
  const BigCount top = x >> shift;
  return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

}  // namespace skewtab
