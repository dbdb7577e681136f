#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "catamp/errors.hpp"

namespace catamp {

// Standard Laguerre polynomial L_n(x), L_n(0) = 1, by the three-term recurrence.
template <class Real = double>
Real laguerre(int n, Real x) {
  if (n < 0) throw DomainError("Laguerre order must be nonnegative");
  Real prev = 1, cur = 1 - x;
  if (n == 0) return prev;
  for (int k = 1; k < n; ++k) {
    const Real next = ((2 * k + 1 - x) * cur - k * prev) / (k + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

// Associated Laguerre L_n^(a)(x).
template <class Real = double>
Real laguerre(int n, int a, Real x) {
  if (n < 0 || a < 0) throw DomainError("Laguerre order must be nonnegative");
  Real prev = 1, cur = 1 + a - x;
  if (n == 0) return prev;
  for (int k = 1; k < n; ++k) {
    const Real next = ((2 * k + 1 + a - x) * cur - (k + a) * prev) / (k + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

// The factorial-scaled polynomial n! L_n(x), summed term by term as
// sum_m (n!)^2 (-x)^m / ((n-m)! (m!)^2).  Only used to audit conventions.
inline double laguerre_factorial_scaled(int n, double x) {
  if (n < 0) throw DomainError("Laguerre order must be nonnegative");
  double sum = 0;
  for (int m = 0; m <= n; ++m) {
    const double lg = 2 * std::lgamma(n + 1.0) - std::lgamma(n - m + 1.0) - 2 * std::lgamma(m + 1.0);
    sum += std::exp(lg) * std::pow(-x, m);
  }
  return sum;
}

// T_n(x, u) = x^n L_n(u / x) for n = 0..n_max.  The recurrence
// (n+1) T_{n+1} = ((2n+1) x - u) T_n - n x^2 T_{n-1} stays finite at x = 0,
// where T_n = (-u)^n / n!.
template <class Real>
std::vector<std::complex<Real>> scaled_laguerre(std::complex<Real> x, std::complex<Real> u, int n_max) {
  std::vector<std::complex<Real>> T(std::size_t(n_max) + 1);
  T[0] = 1;
  if (n_max >= 1) T[1] = x - u;
  const auto x2 = x * x;
  for (int n = 1; n < n_max; ++n)
    T[n + 1] = ((Real(2 * n + 1) * x - u) * T[n] - Real(n) * x2 * T[n - 1]) / Real(n + 1);
  return T;
}

}  // namespace catamp
