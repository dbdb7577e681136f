#pragma once

#include <array>
#include <complex>

#include "catamp/coeffs.hpp"
#include "catamp/params.hpp"

namespace catamp {

enum class TermClass { Mixture, SymInterference, AsymInterference };

inline const char* to_string(TermClass c) {
  switch (c) {
    case TermClass::Mixture: return "M";
    case TermClass::SymInterference: return "SI";
    case TermClass::AsymInterference: return "AI";
  }
  return "?";
}

// weight * |a1_ket, a2_ket><a2_bra, a1_bra|
template <class Real = double>
struct DensityTerm {
  std::complex<Real> a1_ket, a1_bra;
  std::complex<Real> a2_ket, a2_bra;
  std::complex<Real> weight{1};
  TermClass cls = TermClass::Mixture;
  // weight = exp(i (k1 phi1 + k2 phi2)), k_j in {-1, 0, 1}
  int phase1 = 0, phase2 = 0;
};

template <class Real = double>
struct TermSet {
  std::array<DensityTerm<Real>, 16> terms;
  Real norm = 1;  // N1^2 N2^2
};

// Ordered by (mode-1 ket sign, mode-1 bra sign, mode-2 ket sign, mode-2 bra
// sign), + before -.  A ket on -alpha carries e^{i phi}, a bra on -alpha e^{-i phi}.
template <class Real = double>
TermSet<Real> enumerate_terms(const CatSpec& c1, const CatSpec& c2) {
  TermSet<Real> out;
  out.norm = normalization<Real>(c1) * normalization<Real>(c2);
  const std::complex<Real> al1 = std::polar(Real(c1.amp_mag), Real(c1.amp_phase));
  const std::complex<Real> al2 = std::polar(Real(c2.amp_mag), Real(c2.amp_phase));
  const Real ph1 = c1.rel_phase, ph2 = c2.rel_phase;
  int idx = 0;
  for (int k1 = 0; k1 < 2; ++k1)
    for (int b1 = 0; b1 < 2; ++b1)
      for (int k2 = 0; k2 < 2; ++k2)
        for (int b2 = 0; b2 < 2; ++b2) {
          DensityTerm<Real> d;
          d.a1_ket = k1 ? -al1 : al1;
          d.a1_bra = b1 ? -al1 : al1;
          d.a2_ket = k2 ? -al2 : al2;
          d.a2_bra = b2 ? -al2 : al2;
          d.phase1 = k1 - b1;
          d.phase2 = k2 - b2;
          d.weight = std::polar(Real(1), d.phase1 * ph1 + d.phase2 * ph2);
          const bool diag1 = k1 == b1, diag2 = k2 == b2;
          d.cls = (diag1 && diag2)     ? TermClass::Mixture
                  : (!diag1 && !diag2) ? TermClass::SymInterference
                                       : TermClass::AsymInterference;
          out.terms[idx++] = d;
        }
  return out;
}

// Log of <bra|ket> for both modes: -1/2 sum (|b|^2 + |k|^2 - 2 b* k).
template <class Real>
std::complex<Real> log_overlap(const DensityTerm<Real>& d) {
  auto one = [](std::complex<Real> k, std::complex<Real> b) {
    return -(std::norm(b) + std::norm(k) - Real(2) * std::conj(b) * k) / Real(2);
  };
  return one(d.a1_ket, d.a1_bra) + one(d.a2_ket, d.a2_bra);
}

// Drift coefficients of one term after evolution.  creation[j] multiplies
// zeta_j and is the term's <A_j^dagger>; annihilation[j] multiplies -zeta_j^*
// and is its <A_j>.  The bra amplitudes enter conjugated.
template <class Real>
struct Drift {
  std::array<std::complex<Real>, 2> creation;
  std::array<std::complex<Real>, 2> annihilation;
};

template <class Real>
Drift<Real> evolved_amplitudes(const DensityTerm<Real>& d, const EvolvedCoeffs<Real>& c) {
  const auto b1 = std::conj(d.a1_bra), b2 = std::conj(d.a2_bra);
  const auto f2c = std::conj(c.f2);
  Drift<Real> out;
  out.creation[0] = b1 * c.f1 + d.a2_ket * f2c;
  out.creation[1] = d.a1_ket * f2c + b2 * c.f3;
  out.annihilation[0] = d.a1_ket * c.f1 + b2 * c.f2;
  out.annihilation[1] = b1 * c.f2 + d.a2_ket * c.f3;
  return out;
}

}  // namespace catamp
