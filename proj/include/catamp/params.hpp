#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include "catamp/errors.hpp"

namespace catamp {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Reduce any real angle to [0, 2pi).
inline double wrap_phase(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

// One mode's initial state N (|alpha> + e^{i rel_phase} |-alpha>),
// alpha = amp_mag e^{i amp_phase}.
struct CatSpec {
  double amp_mag = 0.0;
  double amp_phase = 0.0;
  double rel_phase = 0.0;

  static CatSpec make(double mag, double amp_phase, double rel_phase) {
    if (!(mag >= 0.0) || !std::isfinite(mag))
      throw DomainError("cat amplitude must be finite and nonnegative");
    if (!std::isfinite(amp_phase) || !std::isfinite(rel_phase))
      throw DomainError("cat phases must be finite");
    return CatSpec{mag, wrap_phase(amp_phase), wrap_phase(rel_phase)};
  }
  static CatSpec even(double mag, double amp_phase = 0.0) { return make(mag, amp_phase, 0.0); }
  static CatSpec odd(double mag, double amp_phase = 0.0) { return make(mag, amp_phase, kPi); }
  static CatSpec yurke_stoler(double mag, double amp_phase = 0.0) {
    return make(mag, amp_phase, kPi / 2);
  }

  std::complex<double> amplitude() const { return std::polar(amp_mag, amp_phase); }
};

inline bool is_degenerate(const CatSpec& c) {
  return c.amp_mag == 0.0 && std::abs(wrap_phase(c.rel_phase) - kPi) < 1e-12;
}

// N^2 = 1 / (2 [1 + e^{-2|a|^2} cos phi]).  The bracket is rewritten as
// (1 - e^{-2x}) + 2 e^{-2x} cos^2(phi/2) so small amplitudes keep full precision.
template <class Real = double>
Real normalization(const CatSpec& c) {
  if (is_degenerate(c)) throw DegenerateCat("odd cat with zero amplitude has no normalization");
  const Real x = Real(c.amp_mag) * Real(c.amp_mag);
  const Real ch = std::cos(Real(c.rel_phase) / 2);
  const Real den = -std::expm1(-2 * x) + 2 * std::exp(-2 * x) * ch * ch;
  return Real(1) / (2 * den);
}

enum class Regime { Underdamped, Critical, Overdamped };

struct AmplifierParams {
  double g = 1.0;
  double pump_phase = 0.0;
  double gamma1 = 0.0;
  double gamma2 = 0.0;
  double nbar1 = 0.0;
  double nbar2 = 0.0;

  static AmplifierParams make(double g, double phi, double gamma1, double gamma2, double nbar1,
                              double nbar2) {
    AmplifierParams p{g, wrap_phase(phi), gamma1, gamma2, nbar1, nbar2};
    p.validate();
    return p;
  }
  static AmplifierParams symmetric(double g, double phi, double gamma = 0.0, double nbar = 0.0) {
    return make(g, phi, gamma, gamma, nbar, nbar);
  }
  static AmplifierParams undamped(double g, double phi) { return symmetric(g, phi); }

  void validate() const {
    auto nonneg = [](double v, const char* what) {
      if (!(v >= 0.0) || !std::isfinite(v)) throw DomainError(std::string(what) + " must be finite and nonnegative");
    };
    nonneg(g, "g");
    nonneg(gamma1, "gamma1");
    nonneg(gamma2, "gamma2");
    nonneg(nbar1, "nbar1");
    nonneg(nbar2, "nbar2");
    if (!std::isfinite(pump_phase)) throw DomainError("pump phase must be finite");
  }

  double epsilon() const {
    const double d = gamma1 - gamma2;
    return d * d + 16.0 * g * g;
  }
  bool undamped_case() const { return gamma1 == 0.0 && gamma2 == 0.0; }
};

// Amplification wins iff the growing eigenrate is positive: 4g^2 > gamma1 gamma2.
// For equal losses this is the usual 2g > gamma.
inline Regime classify(const AmplifierParams& p) {
  const double lhs = 4.0 * p.g * p.g, rhs = p.gamma1 * p.gamma2;
  if (p.gamma1 == p.gamma2) {
    const double two_g = 2.0 * p.g;
    if (two_g > p.gamma1) return Regime::Underdamped;
    if (two_g < p.gamma1) return Regime::Overdamped;
    return Regime::Critical;
  }
  if (lhs > rhs) return Regime::Underdamped;
  if (lhs < rhs) return Regime::Overdamped;
  return Regime::Critical;
}

inline const char* to_string(Regime r) {
  switch (r) {
    case Regime::Underdamped: return "underdamped";
    case Regime::Critical: return "critical";
    case Regime::Overdamped: return "overdamped";
  }
  return "?";
}

// psi = phi - psi1 - psi2, always recomputed from the inputs.
inline double mismatch_phase(const AmplifierParams& p, const CatSpec& c1, const CatSpec& c2) {
  return wrap_phase(p.pump_phase - c1.amp_phase - c2.amp_phase);
}

// Initial two-mode configuration: signal and idler cats.
struct CatPair {
  CatSpec signal;
  CatSpec idler;
};

}  // namespace catamp
