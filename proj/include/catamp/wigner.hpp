#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "catamp/charfn.hpp"

namespace catamp {

// Single-mode Wigner function of one term (mode 1 or 2), weight and overlap
// included.  A Gaussian of width (1 + 2B)/4 centred between the term's drifts.
template <class Real>
std::complex<Real> wigner_term(const DensityTerm<Real>& d, const EvolvedCoeffs<Real>& c, std::complex<Real> z,
                               int mode = 1) {
  const auto dr = evolved_amplitudes(d, c);
  const int j = mode - 1;
  const Real w = 1 + 2 * (j == 0 ? c.B1N : c.B2N);
  const auto e = log_overlap(d) - Real(2) * (dr.creation[j] - std::conj(z)) * (dr.annihilation[j] - z) / w;
  return d.weight * Real(2) / (std::numbers::pi_v<Real> * w) * std::exp(e);
}

template <class Real>
std::complex<Real> wigner_value(const EvolvedState<Real>& s, std::complex<Real> z, int mode = 1) {
  const int j = mode - 1;
  const Real w = 1 + 2 * (j == 0 ? s.coeffs.B1N : s.coeffs.B2N);
  std::complex<Real> acc{};
  for (int i = 0; i < 16; ++i) {
    const auto& dr = s.drift[i];
    const auto e = s.log_pref[i] - Real(2) * (dr.creation[j] - std::conj(z)) * (dr.annihilation[j] - z) / w;
    acc += s.set.terms[i].weight * std::exp(e);
  }
  return s.set.norm * Real(2) / (std::numbers::pi_v<Real> * w) * acc;
}

struct GridSpec {
  double x_min = -1, x_max = 1, y_min = -1, y_max = 1;
  int nx = 201, ny = 201;
};

// W at z = x + i y, row-major in y.
struct PhaseGrid {
  GridSpec spec;
  std::vector<double> values;
  double max_imag = 0;  // largest discarded imaginary part
  bool support_warning = false;

  double x(int i) const { return spec.nx == 1 ? spec.x_min : spec.x_min + (spec.x_max - spec.x_min) * i / (spec.nx - 1); }
  double y(int j) const { return spec.ny == 1 ? spec.y_min : spec.y_min + (spec.y_max - spec.y_min) * j / (spec.ny - 1); }
  double at(int i, int j) const { return values[std::size_t(j) * spec.nx + i]; }
  double dx() const { return spec.nx > 1 ? (spec.x_max - spec.x_min) / (spec.nx - 1) : 0.0; }
  double dy() const { return spec.ny > 1 ? (spec.y_max - spec.y_min) / (spec.ny - 1) : 0.0; }

  double min() const { return *std::min_element(values.begin(), values.end()); }
  double max() const { return *std::max_element(values.begin(), values.end()); }
  double riemann_sum() const {
    double s = 0;
    for (double v : values) s += v;
    return s * dx() * dy();
  }
  // Strict interior local maxima (8-neighbourhood) above frac * max.
  int count_local_maxima(double frac = 0.05) const {
    const double thr = frac * max();
    int count = 0;
    for (int j = 1; j + 1 < spec.ny; ++j)
      for (int i = 1; i + 1 < spec.nx; ++i) {
        const double v = at(i, j);
        if (v <= thr) continue;
        bool peak = true;
        for (int dj = -1; dj <= 1 && peak; ++dj)
          for (int di = -1; di <= 1; ++di)
            if ((di || dj) && at(i + di, j + dj) >= v) {
              peak = false;
              break;
            }
        count += peak;
      }
    return count;
  }
};

// Square window around the origin wide enough for every term's Gaussian.
template <class Real>
GridSpec default_grid(const EvolvedState<Real>& s, int mode = 1, int points = 201) {
  const int j = mode - 1;
  double reach = 0;
  for (const auto& dr : s.drift) reach = std::max(reach, double(std::abs(dr.annihilation[j])));
  const double B = double(j == 0 ? s.coeffs.B1N : s.coeffs.B2N);
  const double r = reach + 5.0 * std::sqrt(1.0 + 2.0 * B);
  return {-r, r, -r, r, points, points};
}

template <class Real>
PhaseGrid wigner_grid(const EvolvedState<Real>& s, const GridSpec& g, int mode = 1) {
  if (g.nx < 1 || g.ny < 1) throw DomainError("grid needs at least one point per axis");
  PhaseGrid out;
  out.spec = g;
  out.values.resize(std::size_t(g.nx) * g.ny);
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      const auto w = wigner_value(s, std::complex<Real>(Real(out.x(i)), Real(out.y(j))), mode);
      out.values[std::size_t(j) * g.nx + i] = double(w.real());
      out.max_imag = std::max(out.max_imag, double(std::abs(w.imag())));
    }
  double edge = 0;
  for (int i = 0; i < g.nx; ++i) edge = std::max({edge, std::abs(out.at(i, 0)), std::abs(out.at(i, g.ny - 1))});
  for (int j = 0; j < g.ny; ++j) edge = std::max({edge, std::abs(out.at(0, j)), std::abs(out.at(g.nx - 1, j))});
  double peak = 0;
  for (double v : out.values) peak = std::max(peak, std::abs(v));
  out.support_warning = edge > 1e-6 * peak;
  return out;
}

template <class Real = double>
PhaseGrid wigner_grid(const CatPair& cats, const AmplifierParams& p, double t, int mode = 1) {
  const auto s = evolve<Real>(cats, p, t);
  return wigner_grid(s, default_grid(s, mode), mode);
}

// W along the line y = y0.
template <class Real>
std::vector<double> wigner_cut(const EvolvedState<Real>& s, double y0, double x_min, double x_max, int n, int mode = 1) {
  std::vector<double> out(std::size_t(std::max(n, 0)));
  for (int i = 0; i < n; ++i) {
    const double x = n == 1 ? x_min : x_min + (x_max - x_min) * i / (n - 1);
    out[i] = double(wigner_value(s, std::complex<Real>(Real(x), Real(y0)), mode).real());
  }
  return out;
}

inline constexpr double kDefaultCutY = -0.25;

}  // namespace catamp
