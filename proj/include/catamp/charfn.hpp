#pragma once

#include <array>
#include <complex>
#include <vector>

#include "catamp/coeffs.hpp"
#include "catamp/rho_terms.hpp"

namespace catamp {

// Initial terms, coefficients and per-term drifts at one time, computed once.
template <class Real = double>
struct EvolvedState {
  EvolvedCoeffs<Real> coeffs;
  TermSet<Real> set;
  std::array<Drift<Real>, 16> drift;
  std::array<std::complex<Real>, 16> log_pref;  // log <bra|ket>
};

template <class Real = double>
EvolvedState<Real> evolve(const CatPair& cats, const AmplifierParams& p, double t) {
  EvolvedState<Real> s;
  s.coeffs = evolve_coeffs<Real>(p, t);
  s.set = enumerate_terms<Real>(cats.signal, cats.idler);
  for (int i = 0; i < 16; ++i) {
    s.drift[i] = evolved_amplitudes(s.set.terms[i], s.coeffs);
    s.log_pref[i] = log_overlap(s.set.terms[i]);
  }
  return s;
}

namespace detail {

template <class Real>
std::complex<Real> char_exponent(const Drift<Real>& dr, const EvolvedCoeffs<Real>& c,
                                 std::complex<Real> z1, std::complex<Real> z2) {
  const auto z1c = std::conj(z1), z2c = std::conj(z2);
  return z1 * z2 * c.D + z1c * z2c * std::conj(c.D) - c.B1N * std::norm(z1) - c.B2N * std::norm(z2) +
         z1 * dr.creation[0] - z1c * dr.annihilation[0] + z2 * dr.creation[1] - z2c * dr.annihilation[1];
}

}  // namespace detail

// Normally ordered characteristic function of one term, weight included.
template <class Real>
std::complex<Real> char_term(const DensityTerm<Real>& d, const EvolvedCoeffs<Real>& c,
                             std::complex<Real> z1, std::complex<Real> z2) {
  const auto dr = evolved_amplitudes(d, c);
  return d.weight * std::exp(log_overlap(d) + detail::char_exponent(dr, c, z1, z2));
}

template <class Real>
std::complex<Real> single_mode_char(const DensityTerm<Real>& d, const EvolvedCoeffs<Real>& c,
                                    std::complex<Real> z1) {
  return char_term(d, c, z1, std::complex<Real>{});
}

template <class Real>
std::complex<Real> char_function(const EvolvedState<Real>& s, std::complex<Real> z1, std::complex<Real> z2) {
  std::complex<Real> acc{};
  for (int i = 0; i < 16; ++i)
    acc += s.set.terms[i].weight * std::exp(s.log_pref[i] + detail::char_exponent(s.drift[i], s.coeffs, z1, z2));
  return s.set.norm * acc;
}

inline constexpr int kMaxMomentOrder = 4;

namespace detail {

// Derivatives of exp(v.M.v/2 + l.v) at v = 0 over v = (z1, -z1*, z2, -z2*).
template <class Real>
struct Gauss4 {
  std::array<std::complex<Real>, 4> l;
  std::array<std::array<std::complex<Real>, 4>, 4> M{};

  std::complex<Real> deriv(const int* idx, int n) const {
    if (n == 0) return {1};
    const int first = idx[0];
    int rest[kMaxMomentOrder];
    for (int i = 1; i < n; ++i) rest[i - 1] = idx[i];
    std::complex<Real> acc = l[first] * deriv(rest, n - 1);
    for (int j = 0; j < n - 1; ++j) {
      const auto m = M[first][rest[j]];
      if (m == std::complex<Real>{}) continue;
      int sub[kMaxMomentOrder];
      int k = 0;
      for (int i = 0; i < n - 1; ++i)
        if (i != j) sub[k++] = rest[i];
      acc += m * deriv(sub, n - 2);
    }
    return acc;
  }
};

template <class Real>
Gauss4<Real> gauss_of(const Drift<Real>& dr, const EvolvedCoeffs<Real>& c) {
  Gauss4<Real> g;
  g.l = {dr.creation[0], dr.annihilation[0], dr.creation[1], dr.annihilation[1]};
  auto set = [&](int i, int j, std::complex<Real> v) { g.M[i][j] = g.M[j][i] = v; };
  set(0, 2, c.D);
  set(1, 3, std::conj(c.D));
  set(0, 1, c.B1N);
  set(2, 3, c.B2N);
  return g;
}

}  // namespace detail

// <A1^dag^m1 A1^n1 A2^dag^m2 A2^n2> contributed by one term, without the weight
// and overlap prefactor.
template <class Real>
std::complex<Real> term_moment(const Drift<Real>& dr, const EvolvedCoeffs<Real>& c, int m1, int n1, int m2, int n2) {
  if (m1 < 0 || n1 < 0 || m2 < 0 || n2 < 0) throw DomainError("moment orders must be nonnegative");
  if (m1 + n1 + m2 + n2 > kMaxMomentOrder) throw OrderTooHigh("moment order above 4");
  int idx[kMaxMomentOrder];
  int n = 0;
  for (int i = 0; i < m1; ++i) idx[n++] = 0;
  for (int i = 0; i < n1; ++i) idx[n++] = 1;
  for (int i = 0; i < m2; ++i) idx[n++] = 2;
  for (int i = 0; i < n2; ++i) idx[n++] = 3;
  return detail::gauss_of(dr, c).deriv(idx, n);
}

template <class Real>
std::complex<Real> moment(const EvolvedState<Real>& s, int m1, int n1, int m2, int n2) {
  std::complex<Real> acc{};
  for (int i = 0; i < 16; ++i)
    acc += s.set.terms[i].weight * std::exp(s.log_pref[i]) * term_moment(s.drift[i], s.coeffs, m1, n1, m2, n2);
  return s.set.norm * acc;
}

template <class Real = double>
std::complex<Real> moment(int m1, int n1, int m2, int n2, const CatPair& cats, const AmplifierParams& p, double t) {
  return moment(evolve<Real>(cats, p, t), m1, n1, m2, n2);
}

}  // namespace catamp
