#pragma once

#include <complex>
#include <numbers>
#include <utility>
#include <vector>

#include "catamp/errors.hpp"

namespace catamp::detail {

// In-place radix-2 transform, X[n] = sum_k x[k] e^{-2 pi i k n / N}.
// Twiddles are evaluated directly rather than by repeated multiplication so
// the long double path keeps its extra digits.
template <class Real>
void fft_forward(std::vector<std::complex<Real>>& a) {
  const std::size_t n = a.size();
  if (n == 0 || (n & (n - 1)) != 0) throw DomainError("transform length must be a power of two");
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  std::vector<std::complex<Real>> tw(n / 2);
  const Real base = -2 * std::numbers::pi_v<Real> / Real(n);
  for (std::size_t k = 0; k < n / 2; ++k) tw[k] = std::polar(Real(1), base * Real(k));
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2, stride = n / len;
    for (std::size_t i = 0; i < n; i += len)
      for (std::size_t k = 0; k < half; ++k) {
        const auto u = a[i + k];
        const auto v = a[i + k + half] * tw[k * stride];
        a[i + k] = u + v;
        a[i + k + half] = u - v;
      }
  }
}

}  // namespace catamp::detail
