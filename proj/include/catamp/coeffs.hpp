#pragma once

#include <cmath>
#include <complex>

#include "catamp/params.hpp"

namespace catamp {

// Everything time dependent at one instant t.  f1, f3 propagate each mode's own
// amplitude, f2 mixes in the conjugate of the partner; B1N, B2N are the added
// noise photons and D the anomalous pair correlation.  E, E1, F, G are the
// auxiliary combinations entering the noise terms.
template <class Real>
struct EvolvedCoeffs {
  Real t{};
  Real f1{1};
  std::complex<Real> f2{};
  Real f3{1};
  Real B1N{};
  Real B2N{};
  std::complex<Real> D{};
  Real E{}, E1{}, F{}, G{};
  Real eps{};
  bool near_singular = false;
};

template <class Real>
struct DynCoeffs {
  Real f1;
  std::complex<Real> f2;
  Real f3;
};

template <class Real>
struct NoiseCoeffs {
  Real B1N;
  Real B2N;
  std::complex<Real> D;
  bool near_singular = false;
};

namespace detail {

// Exponentials of the two eigenrates, written so that nothing overflows before
// the physical answer does and nothing cancels at small t.
template <class Real>
struct Rates {
  Real s;      // sqrt(eps)
  Real Gam;    // gamma1 + gamma2
  Real a;      // (s - Gam) / 4, growth rate of the amplitudes
  Real U;      // e^{a t}
  Real hs;     // (1 - e^{-s t/2}) / (2 s)
  Real w;      // e^{-s t/2}

  Rates(Real g, Real g1, Real g2, Real t) {
    const Real d = g1 - g2;
    s = std::sqrt(d * d + 16 * g * g);
    Gam = g1 + g2;
    const Real sum = s + Gam;
    a = sum > 0 ? (4 * g * g - g1 * g2) / sum : Real(0);
    U = std::exp(a * t);
    w = std::exp(-s * t / 2);
    hs = s > 0 ? -std::expm1(-s * t / 2) / (2 * s) : t / 4;
  }
};

template <class Real>
Real expm1_over(Real x, Real t) {
  // (e^{x t} - 1) / x
  return x == 0 ? t : std::expm1(x * t) / x;
}

}  // namespace detail

template <class Real = double>
DynCoeffs<Real> dyn_coeffs(const AmplifierParams& p, double t_in) {
  if (!(t_in >= 0.0)) throw DomainError("time must be nonnegative");
  const Real g = p.g, g1 = p.gamma1, g2 = p.gamma2, t = t_in;
  const detail::Rates<Real> r(g, g1, g2, t);
  const Real c = r.U * (1 + r.w) / 2;  // envelope * cosh
  const Real sh = r.U * r.hs;          // envelope * sinh / sqrt(eps)
  DynCoeffs<Real> out;
  out.f1 = c + (g2 - g1) * sh;
  out.f3 = c + (g1 - g2) * sh;
  out.f2 = std::complex<Real>(0, 4 * g * sh) * std::polar(Real(1), Real(p.pump_phase));
  return out;
}

namespace detail {

template <class Real>
struct Aux {
  Real E, E1, F, G, eps, s;
};

template <class Real>
Aux<Real> aux_coeffs(Real g, Real g1, Real g2, Real t) {
  const Rates<Real> r(g, g1, g2, t);
  const Real U2 = r.U * r.U;
  const Real em = std::expm1(-r.s * t / 2);
  Aux<Real> x;
  x.s = r.s;
  x.eps = r.s * r.s;
  x.E1 = U2 * em * em / 2;
  x.F = -U2 * std::expm1(-r.s * t) / 2;
  x.G = r.Gam > 0 ? -std::expm1(-r.Gam * t / 2) / r.Gam : t / 2;
  x.E = -std::expm1(-r.Gam * t / 2) - x.E1;
  return x;
}

// Noise photons of mode 1; mode 2 follows by swapping the mode labels.
template <class Real>
Real noise_b1(Real g, Real g1, Real g2, Real n1, Real n2, const Aux<Real>& x) {
  const Real den = g1 * g2 - 4 * g * g;
  const Real gg = g * g;
  return (8 * gg * x.E1 +
          g1 * n1 / den * ((g2 * x.eps - 4 * gg * (g1 + g2)) * x.E - x.s * (g2 * (g2 - g1) + 4 * gg) * x.F) +
          4 * g2 * gg * (1 + n2) / den * ((g1 + g2) * x.E - x.s * x.F) -
          16 * gg * x.G * (g2 * (1 + n2) - g1 * n1)) /
         x.eps;
}

// Anomalous correlation without its e^{-i phi} phase.
template <class Real>
std::complex<Real> noise_d(Real g, Real g1, Real g2, Real n1, Real n2, const Aux<Real>& x) {
  const Real den = g1 * g2 - 4 * g * g;
  const Real gg = g * g;
  const Real brace = (g2 - g1) * x.E1 - x.s * x.F +
                     g1 * n1 / den * ((g1 * g2 - g2 * g2 - 8 * gg) * x.E + g2 * x.s * x.F) +
                     g2 * (1 + n2) / den * ((g1 * g2 - g1 * g1 - 8 * gg) * x.E + g1 * x.s * x.F) +
                     2 * x.G * (g1 * n1 * (g2 - g1) + g2 * (1 + n2) * (g1 - g2));
  return {0, 2 * g * brace / x.eps};
}

template <class Real>
NoiseCoeffs<Real> noise_general(Real g, Real g1, Real g2, Real n1, Real n2, Real phi, Real t) {
  const auto x = aux_coeffs(g, g1, g2, t);
  NoiseCoeffs<Real> out;
  out.B1N = noise_b1(g, g1, g2, n1, n2, x);
  out.B2N = noise_b1(g, g2, g1, n2, n1, x);
  out.D = noise_d(g, g1, g2, n1, n2, x) * std::polar(Real(1), -phi);
  return out;
}

// Equal losses solved directly from the moment equations; valid on the whole
// gamma = 2g line where the general expression is 0/0.
template <class Real>
NoiseCoeffs<Real> noise_symmetric(Real g, Real gam, Real n1, Real n2, Real phi, Real t) {
  const Real nb = (n1 + n2) / 2;
  const Real S = (gam * nb + g) * expm1_over(2 * g - gam, t);
  const Real Dd = (gam * nb - g) * expm1_over(-(2 * g + gam), t);
  const Real diff = (n1 - n2) * -std::expm1(-gam * t);
  const Real K = (S - Dd) / 2;
  NoiseCoeffs<Real> out;
  out.B1N = (S + Dd) / 2 + diff / 2;
  out.B2N = (S + Dd) / 2 - diff / 2;
  out.D = std::complex<Real>(0, -K) * std::polar(Real(1), -phi);
  return out;
}

}  // namespace detail

inline bool near_singular_denominator(const AmplifierParams& p) {
  const double prod = p.gamma1 * p.gamma2, gg = 4.0 * p.g * p.g;
  return p.g > 0 && std::abs(prod - gg) < 1e-5 * (prod + gg);
}

template <class Real = double>
NoiseCoeffs<Real> noise_coeffs(const AmplifierParams& p, double t_in) {
  if (!(t_in >= 0.0)) throw DomainError("time must be nonnegative");
  const Real g = p.g, g1 = p.gamma1, g2 = p.gamma2, n1 = p.nbar1, n2 = p.nbar2,
             phi = p.pump_phase, t = t_in;
  if (t == 0) return {0, 0, {}, false};
  if (p.g == 0.0) {
    // uncoupled thermalization
    return {n1 * -std::expm1(-g1 * t), n2 * -std::expm1(-g2 * t), {}, false};
  }
  if (!near_singular_denominator(p)) return detail::noise_general(g, g1, g2, n1, n2, phi, t);

  NoiseCoeffs<Real> out;
  if (p.gamma1 == p.gamma2) {
    out = detail::noise_symmetric(g, g1, n1, n2, phi, t);
  } else {
    // Richardson on symmetric offsets of both loss rates
    auto at = [&](Real sig) { return detail::noise_general(g, g1 * (1 + sig), g2 * (1 + sig), n1, n2, phi, t); };
    auto mid = [&](Real h) {
      auto a = at(h), b = at(-h);
      return NoiseCoeffs<Real>{(a.B1N + b.B1N) / 2, (a.B2N + b.B2N) / 2, (a.D + b.D) / Real(2), false};
    };
    const Real h = Real(1e-3);
    auto a1 = mid(h), a2 = mid(2 * h);
    out.B1N = (4 * a1.B1N - a2.B1N) / 3;
    out.B2N = (4 * a1.B2N - a2.B2N) / 3;
    out.D = (Real(4) * a1.D - a2.D) / Real(3);
  }
  out.near_singular = true;
  return out;
}

template <class Real = double>
EvolvedCoeffs<Real> evolve_coeffs(const AmplifierParams& p, double t) {
  const auto dyn = dyn_coeffs<Real>(p, t);
  const auto nz = noise_coeffs<Real>(p, t);
  const auto x = detail::aux_coeffs<Real>(p.g, p.gamma1, p.gamma2, t);
  EvolvedCoeffs<Real> c;
  c.t = t;
  c.f1 = dyn.f1;
  c.f2 = dyn.f2;
  c.f3 = dyn.f3;
  c.B1N = nz.B1N;
  c.B2N = nz.B2N;
  c.D = nz.D;
  c.E = x.E;
  c.E1 = x.E1;
  c.F = x.F;
  c.G = x.G;
  c.eps = x.eps;
  c.near_singular = nz.near_singular;
  return c;
}

}  // namespace catamp
