#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "catamp/charfn.hpp"
#include "catamp/detail/fft.hpp"
#include "catamp/laguerre.hpp"

namespace catamp {

// Partial-fraction form of one term's generating function for n1 + n2:
//   G(lambda) = prod_{+,-} exp(A lambda / (1 + lambda mu)) / (1 + lambda mu)
// with mu = lambda_plus, lambda_minus the eigenvalues of [[B1, D], [D*, B2]].
template <class Real>
struct GenQuantities {
  Real lambda_plus{}, lambda_minus{};
  std::complex<Real> A_plus{}, A_minus{};
};

template <class Real>
GenQuantities<Real> generating_quantities(const Drift<Real>& dr, const EvolvedCoeffs<Real>& c) {
  const auto p1 = dr.creation[0] * dr.annihilation[0];
  const auto p2 = dr.creation[1] * dr.annihilation[1];
  GenQuantities<Real> q;
  const Real dd = std::norm(c.D);
  if (dd == 0) {
    q.lambda_plus = c.B1N;
    q.A_plus = -p1;
    q.lambda_minus = c.B2N;
    q.A_minus = -p2;
    return q;
  }
  // gap +- d without cancellation, d = B1 - B2
  const Real d = c.B1N - c.B2N;
  const Real gap = std::sqrt(d * d + 4 * dd);
  const Real big = gap + std::abs(d);
  const Real small = 4 * dd / big;
  const Real gpd = d >= 0 ? big : small;
  const Real gmd = d >= 0 ? small : big;
  q.lambda_plus = d >= 0 ? c.B1N + small / 2 : c.B2N + small / 2;
  q.lambda_minus = d >= 0 ? c.B2N - small / 2 : c.B1N - small / 2;
  const auto K = dr.annihilation[0] * dr.annihilation[1] * c.D + dr.creation[0] * dr.creation[1] * std::conj(c.D);
  q.A_plus = -(K + p1 * (gpd / 2) + p2 * (gmd / 2)) / gap;
  q.A_minus = (K - p1 * (gmd / 2) - p2 * (gpd / 2)) / gap;
  return q;
}

template <class Real>
GenQuantities<Real> generating_quantities(const DensityTerm<Real>& term, const EvolvedCoeffs<Real>& c) {
  return generating_quantities(evolved_amplitudes(term, c), c);
}

struct Distribution {
  std::vector<double> probs;  // n = 0..n_max
  int n_max = 0;
  double tail_mass = 0;  // 1 - sum(probs)
  bool truncation_warning = false;
  // class parts of a sum distribution; empty for single-mode marginals
  std::vector<double> mixture, sym_interference, asym_interference;
};

inline constexpr double kTailTolerance = 1e-6;

enum class PndMethod { Auto, Laguerre, Contour };
inline constexpr int kLaguerreAutoLimit = 1024;

namespace detail {

inline int class_index(TermClass c) { return c == TermClass::Mixture ? 0 : c == TermClass::SymInterference ? 1 : 2; }

inline void finish(Distribution& d) {
  double s = 0;
  for (double v : d.probs) s += v;
  d.tail_mass = 1.0 - s;
  d.truncation_warning = std::abs(d.tail_mass) > kTailTolerance;
}

template <class Real>
void sum_pnd_laguerre(const EvolvedState<Real>& s, int n_max, std::vector<std::complex<Real>> (&parts)[3]) {
  for (int i = 0; i < 16; ++i) {
    const auto& term = s.set.terms[i];
    const auto q = generating_quantities(s.drift[i], s.coeffs);
    const Real op = 1 + q.lambda_plus, om = 1 + q.lambda_minus;
    const auto Tp = scaled_laguerre<Real>(q.lambda_plus / op, q.A_plus / (op * op), n_max);
    const auto Tm = scaled_laguerre<Real>(q.lambda_minus / om, q.A_minus / (om * om), n_max);
    const auto coef =
        s.set.norm * term.weight * std::exp(s.log_pref[i] + q.A_plus / op + q.A_minus / om) / (op * om);
    auto& out = parts[class_index(term.cls)];
    for (int n = 0; n <= n_max; ++n) {
      std::complex<Real> acc{};
      for (int l = 0; l <= n; ++l) acc += Tm[n - l] * Tp[l];
      out[n] += coef * acc;
    }
  }
}

// Coefficients of G(1 - z) read off on the unit circle by one FFT per class.
template <class Real>
void sum_pnd_contour(const EvolvedState<Real>& s, int n_max, std::vector<std::complex<Real>> (&parts)[3]) {
  std::size_t N = 64;
  while (N < 2 * (std::size_t(n_max) + 1)) N <<= 1;
  std::vector<std::complex<Real>> lam(N);
  const Real pi = std::numbers::pi_v<Real>;
  for (std::size_t k = 0; k < N; ++k) {
    const Real th = 2 * pi * Real(k) / Real(N);
    const Real sh = std::sin(th / 2);
    lam[k] = {2 * sh * sh, -std::sin(th)};  // 1 - e^{i th}
  }
  GenQuantities<Real> q[16];
  for (int i = 0; i < 16; ++i) q[i] = generating_quantities(s.drift[i], s.coeffs);
  std::vector<std::complex<Real>> G[3];
  for (auto& g : G) g.assign(N, {});
  for (std::size_t k = 0; k < N; ++k) {
    const auto l = lam[k];
    const auto dp = Real(1) + l * q[0].lambda_plus, dm = Real(1) + l * q[0].lambda_minus;
    for (int i = 0; i < 16; ++i) {
      const auto& term = s.set.terms[i];
      const auto e = s.log_pref[i] + q[i].A_plus * l / dp + q[i].A_minus * l / dm;
      G[class_index(term.cls)][k] += term.weight * std::exp(e);
    }
    const auto inv = Real(1) / (dp * dm);
    for (auto& g : G) g[k] *= inv;
  }
  for (int c = 0; c < 3; ++c) {
    fft_forward(G[c]);
    for (int n = 0; n <= n_max; ++n) parts[c][n] = s.set.norm * G[c][n] / Real(N);
  }
}

}  // namespace detail

// Distribution of n1 + n2 with its mixture / symmetric / asymmetric
// interference parts.
template <class Real = long double>
Distribution sum_pnd(const EvolvedState<Real>& s, int n_max, PndMethod method = PndMethod::Auto) {
  if (n_max < 0) throw DomainError("n_max must be nonnegative");
  std::vector<std::complex<Real>> parts[3];
  for (auto& p : parts) p.assign(std::size_t(n_max) + 1, {});
  const bool contour = method == PndMethod::Contour || (method == PndMethod::Auto && n_max > kLaguerreAutoLimit);
  if (contour)
    detail::sum_pnd_contour(s, n_max, parts);
  else
    detail::sum_pnd_laguerre(s, n_max, parts);
  Distribution d;
  d.n_max = n_max;
  d.probs.resize(std::size_t(n_max) + 1);
  d.mixture.resize(d.probs.size());
  d.sym_interference.resize(d.probs.size());
  d.asym_interference.resize(d.probs.size());
  for (std::size_t n = 0; n < d.probs.size(); ++n) {
    d.mixture[n] = double(parts[0][n].real());
    d.sym_interference[n] = double(parts[1][n].real());
    d.asym_interference[n] = double(parts[2][n].real());
    d.probs[n] = double((parts[0][n] + parts[1][n] + parts[2][n]).real());
  }
  detail::finish(d);
  return d;
}

template <class Real = long double>
Distribution sum_pnd(const CatPair& cats, const AmplifierParams& p, double t, int n_max,
                     PndMethod method = PndMethod::Auto) {
  return sum_pnd(evolve<Real>(cats, p, t), n_max, method);
}

// Photon-number distribution of one mode.
template <class Real = long double>
Distribution single_pnd(int mode, const EvolvedState<Real>& s, int n_max) {
  if (mode != 1 && mode != 2) throw DomainError("mode must be 1 or 2");
  if (n_max < 0) throw DomainError("n_max must be nonnegative");
  const int j = mode - 1;
  const Real mu = j == 0 ? s.coeffs.B1N : s.coeffs.B2N;
  const Real om = 1 + mu;
  std::vector<std::complex<Real>> acc(std::size_t(n_max) + 1);
  for (int i = 0; i < 16; ++i) {
    const auto A = -s.drift[i].creation[j] * s.drift[i].annihilation[j];
    const auto T = scaled_laguerre<Real>(mu / om, A / (om * om), n_max);
    const auto coef = s.set.terms[i].weight * std::exp(s.log_pref[i] + A / om) / om;
    for (int n = 0; n <= n_max; ++n) acc[n] += coef * T[n];
  }
  Distribution d;
  d.n_max = n_max;
  d.probs.resize(acc.size());
  for (std::size_t n = 0; n < acc.size(); ++n) d.probs[n] = double((s.set.norm * acc[n]).real());
  detail::finish(d);
  return d;
}

template <class Real = long double>
Distribution single_pnd(int mode, const CatPair& cats, const AmplifierParams& p, double t, int n_max) {
  return single_pnd(mode, evolve<Real>(cats, p, t), n_max);
}

enum class Scope { Single, Compound };

// Normally ordered k-th moment <W^k>: the falling factorial n(n-1)..(n-k+1)
// of n1 (single) or n1 + n2 (compound), and K = <W^k>/<W>^k - 1.
struct FactorialMoment {
  double moment = 0;
  double Kc = 0;
};

inline constexpr int kMaxFactorialOrder = 64;

namespace detail {

template <class Real>
Real raw_factorial_moment(const EvolvedState<Real>& s, int k, Scope scope, int mode) {
  Real kfact = 1;
  for (int i = 2; i <= k; ++i) kfact *= i;
  std::complex<Real> acc{};
  for (int i = 0; i < 16; ++i) {
    const auto pre = s.set.terms[i].weight * std::exp(s.log_pref[i]);
    std::complex<Real> v;
    if (scope == Scope::Single) {
      const int j = mode - 1;
      const Real mu = j == 0 ? s.coeffs.B1N : s.coeffs.B2N;
      const auto A = -s.drift[i].creation[j] * s.drift[i].annihilation[j];
      v = scaled_laguerre<Real>(mu, A, k)[k];
    } else {
      const auto q = generating_quantities(s.drift[i], s.coeffs);
      const auto Tp = scaled_laguerre<Real>(q.lambda_plus, q.A_plus, k);
      const auto Tm = scaled_laguerre<Real>(q.lambda_minus, q.A_minus, k);
      for (int l = 0; l <= k; ++l) v += Tm[k - l] * Tp[l];
    }
    acc += pre * v;
  }
  return s.set.norm * kfact * acc.real();
}

}  // namespace detail

template <class Real = long double>
FactorialMoment factorial_moment(const EvolvedState<Real>& s, int k, Scope scope, int mode = 1) {
  if (k < 0 || k > kMaxFactorialOrder) throw DomainError("factorial moment order must be in [0, 64]");
  if (scope == Scope::Single && mode != 1 && mode != 2) throw DomainError("mode must be 1 or 2");
  FactorialMoment f;
  const Real mk = detail::raw_factorial_moment(s, k, scope, mode);
  const Real m1 = detail::raw_factorial_moment(s, 1, scope, mode);
  f.moment = double(mk);
  f.Kc = double(mk / std::pow(m1, Real(k)) - 1);
  return f;
}

template <class Real = long double>
FactorialMoment factorial_moment(const CatPair& cats, const AmplifierParams& p, double t, int k, Scope scope,
                                 int mode = 1) {
  return factorial_moment(evolve<Real>(cats, p, t), k, scope, mode);
}

// Truncation that leaves a negligible tail: mean plus ten standard deviations
// from the closed-form moments, plus room for the slowest geometric decay.
template <class Real>
int suggest_n_max(const EvolvedState<Real>& s, Scope scope, int mode = 1) {
  const double m = double(detail::raw_factorial_moment(s, 1, scope, mode));
  const double f2 = double(detail::raw_factorial_moment(s, 2, scope, mode));
  const double sd = std::sqrt(std::max(0.0, f2 + m - m * m));
  double mu;
  if (scope == Scope::Single) {
    mu = double(mode == 1 ? s.coeffs.B1N : s.coeffs.B2N);
  } else {
    mu = double(generating_quantities(s.drift[0], s.coeffs).lambda_plus);
  }
  const double geo = 40.0 * (1.0 + std::max(0.0, mu));
  const double n = std::max(m + 10.0 * sd + geo + 16.0, m + 8.0 * std::sqrt(m + 1.0));
  return int(std::ceil(n));
}

}  // namespace catamp
