#pragma once

#include <cmath>
#include <complex>
#include <algorithm>
#include <optional>
#include <utility>

#include <boost/math/tools/minima.hpp>

#include "catamp/charfn.hpp"

namespace catamp {

// S and Q measure the X = (A + A^dag)/2 and Y = (A - A^dag)/2i variances
// against the vacuum level: zero for vacuum, negative when squeezed.
struct SqueezeFactors {
  double S = 0;
  double Q = 0;
};

template <class Real>
SqueezeFactors single_mode_squeezing(int mode, const EvolvedState<Real>& s) {
  if (mode != 1 && mode != 2) throw DomainError("mode must be 1 or 2");
  const bool m1 = mode == 1;
  const auto a = m1 ? moment(s, 0, 1, 0, 0) : moment(s, 0, 0, 0, 1);
  const auto a2 = m1 ? moment(s, 0, 2, 0, 0) : moment(s, 0, 0, 0, 2);
  const auto n = m1 ? moment(s, 1, 1, 0, 0) : moment(s, 0, 0, 1, 1);
  const Real ra = a.real(), ia = a.imag();
  SqueezeFactors f;
  f.S = double(2 * a2.real() + 2 * n.real() - 4 * ra * ra);
  f.Q = double(2 * n.real() - 2 * a2.real() - 4 * ia * ia);
  return f;
}

template <class Real = double>
SqueezeFactors single_mode_squeezing(int mode, const CatPair& cats, const AmplifierParams& p, double t) {
  return single_mode_squeezing(mode, evolve<Real>(cats, p, t));
}

// Compound quadratures X = (A1 + A1^dag + A2 + A2^dag)/2 and likewise Y.
template <class Real>
SqueezeFactors two_mode_squeezing(const EvolvedState<Real>& s) {
  const auto f1 = single_mode_squeezing(1, s), f2 = single_mode_squeezing(2, s);
  const auto a1 = moment(s, 0, 1, 0, 0), a2 = moment(s, 0, 0, 0, 1);
  const Real pair = moment(s, 0, 1, 0, 1).real();   // Re <A1 A2>
  const Real cross = moment(s, 1, 0, 0, 1).real();  // Re <A1^dag A2>
  const Real covx = 2 * pair + 2 * cross - 4 * a1.real() * a2.real();
  const Real covy = -2 * pair + 2 * cross - 4 * a1.imag() * a2.imag();
  return {(f1.S + f2.S) / 2 + double(covx), (f1.Q + f2.Q) / 2 + double(covy)};
}

template <class Real = double>
SqueezeFactors two_mode_squeezing(const CatPair& cats, const AmplifierParams& p, double t) {
  return two_mode_squeezing(evolve<Real>(cats, p, t));
}

// x (tanh x - 1): the initial Q/2 of an even cat with x = |alpha|^2.
inline double even_q_shape(double x) { return x == 0 ? 0.0 : -2.0 * x / (std::exp(2.0 * x) + 1.0); }
// x (coth x - 1) for the odd cat; positive, tends to 1 as x -> 0.
inline double odd_q_shape(double x) {
  if (x <= 0) throw DomainError("odd cat needs nonzero amplitude");
  return 2.0 * x / std::expm1(2.0 * x);
}

enum class CatKind { Even, Odd, YurkeStoler, Other };

inline CatKind kind_of(const CatSpec& c) {
  const double r = c.rel_phase;
  if (r == 0.0) return CatKind::Even;
  if (std::abs(r - kPi) < 1e-12) return CatKind::Odd;
  if (std::abs(r - kPi / 2) < 1e-12) return CatKind::YurkeStoler;
  return CatKind::Other;
}

// Signal-mode Q in closed form for a real even or odd signal cat with a real
// even, odd or Yurke-Stoler idler, any losses and pump phase.  Empty when the
// configuration is outside that family.
inline std::optional<double> signal_q_closed_form(const CatPair& cats, const AmplifierParams& p, double t) {
  const auto ks = kind_of(cats.signal), ki = kind_of(cats.idler);
  if (cats.signal.amp_phase != 0.0 || cats.idler.amp_phase != 0.0) return std::nullopt;
  if (ks != CatKind::Even && ks != CatKind::Odd) return std::nullopt;
  if (ki == CatKind::Other) return std::nullopt;
  const double x1 = cats.signal.amp_mag * cats.signal.amp_mag;
  const double x2 = cats.idler.amp_mag * cats.idler.amp_mag;
  const auto c = evolve_coeffs<double>(p, t);
  const double phi = p.pump_phase;
  const double sig = ks == CatKind::Even ? even_q_shape(x1) : odd_q_shape(x1);
  double idl = 0;
  switch (ki) {
    case CatKind::Even: idl = std::tanh(x2) + std::cos(2 * phi); break;
    case CatKind::Odd: idl = (x2 == 0 ? 0.0 : 1.0 / std::tanh(x2)) + std::cos(2 * phi); break;
    case CatKind::YurkeStoler: {
      const double sp = std::sin(phi);
      idl = 1 + std::cos(2 * phi) - 2 * std::exp(-4 * x2) * sp * sp;
      break;
    }
    default: break;
  }
  return 2.0 * (c.B1N + c.f1 * c.f1 * sig + x2 * std::norm(c.f2) * idl);
}

// Longest undamped time over which an even or odd signal cat stays Y-squeezed
// at pump phase pi/2.  Empty when there is no squeezing to begin with.
inline std::optional<double> squeeze_survival_time(const CatSpec& signal, const CatSpec& idler, double g) {
  if (!(g > 0)) throw DomainError("gain must be positive");
  const double x1 = signal.amp_mag * signal.amp_mag, x2 = idler.amp_mag * idler.amp_mag;
  double fs = 0, ki = 0;
  switch (kind_of(signal)) {
    case CatKind::Even: fs = even_q_shape(x1); break;
    case CatKind::Odd: fs = odd_q_shape(x1); break;
    default: throw DomainError("signal must be an even or odd cat");
  }
  switch (kind_of(idler)) {
    case CatKind::Even: ki = even_q_shape(x2); break;
    case CatKind::Odd: ki = x2 == 0 ? throw DegenerateCat("odd idler with zero amplitude") : odd_q_shape(x2); break;
    case CatKind::YurkeStoler: ki = -2.0 * x2 * std::exp(-4.0 * x2); break;
    default: throw DomainError("idler must be an even, odd or Yurke-Stoler cat");
  }
  const double rad = -fs / (1 + fs + ki);
  if (rad < 0) return std::nullopt;
  return std::asinh(std::sqrt(rad)) / g;
}

// gt below which the compound Y quadrature of an (even, odd) pair is squeezed,
// real amplitudes, pump phase 0.  Zero when not squeezed initially.
inline double two_mode_squeeze_time_bound(double a1, double a2) {
  if (!(a2 > 0)) throw DomainError("odd idler amplitude must be positive");
  const double x1 = a1 * a1, x2 = a2 * a2;
  const double num = -(even_q_shape(x1) + odd_q_shape(x2));
  if (num <= 0) return 0.0;
  const double den = 2 * (1 + x1 * std::tanh(x1) + x2 / std::tanh(x2));
  return std::asinh(std::sqrt(num / den));
}

struct BoundMaximum {
  double tau;
  double a1, a2;  // amplitudes
  double x1, x2;  // squared amplitudes
};

// Maximize the compound bound over both amplitudes: coarse grid to bracket,
// then nested Brent searches inside the winning cell.
inline BoundMaximum maximize_two_mode_bound() {
  using boost::math::tools::brent_find_minima;
  const int n = 60, bits = 40;
  const double lo1 = 0.0, hi1 = 3.0, lo2 = 0.05, hi2 = 4.0;
  const double h1 = (hi1 - lo1) / n, h2 = (hi2 - lo2) / n;
  double best = -1, b1 = 0, b2 = 0;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      const double a1 = lo1 + i * h1, a2 = lo2 + j * h2;
      const double v = two_mode_squeeze_time_bound(a1, a2);
      if (v > best) best = v, b1 = a1, b2 = a2;
    }
  const double l2 = std::max(lo2, b2 - h2), u2 = b2 + h2;
  auto inner = [&](double a1) {
    auto r = brent_find_minima([&](double a2) { return -two_mode_squeeze_time_bound(a1, a2); }, l2, u2, bits);
    return std::pair<double, double>{r.first, -r.second};
  };
  auto outer = brent_find_minima([&](double a1) { return -inner(a1).second; }, std::max(lo1, b1 - h1), b1 + h1, bits);
  const double a1 = outer.first, a2 = inner(a1).first;
  return {two_mode_squeeze_time_bound(a1, a2), a1, a2, a1 * a1, a2 * a2};
}

// Minimizer and minimum of x (tanh x - 1) over x > 0.
inline std::pair<double, double> even_q_shape_minimum() {
  auto r = boost::math::tools::brent_find_minima([](double x) { return even_q_shape(x); }, 0.0, 5.0, 50);
  return {r.first, r.second};
}

}  // namespace catamp
