#pragma once

// Brute-force reference: the two-mode density matrix in a truncated number
// basis, evolved exactly (no loss) or by RK4 on the thermal master equation.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "catamp/laguerre.hpp"
#include "catamp/params.hpp"
#include "catamp/photon_stats.hpp"
#include "catamp/squeezing.hpp"

namespace catamp::oracle {

inline std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

using cplx = std::complex<double>;

// rho(r, c) with r = n1 * dim2 + n2 and c = m1 * dim2 + m2.
struct FockState {
  int dim1 = 1, dim2 = 1;
  Eigen::MatrixXcd rho;

  int index(int n1, int n2) const { return n1 * dim2 + n2; }
  cplx operator()(int n1, int n2, int m1, int m2) const { return rho(index(n1, n2), index(m1, m2)); }
  double trace() const { return rho.trace().real(); }
  double purity() const { return (rho * rho).trace().real(); }
  double hermiticity_error() const { return (rho - rho.adjoint()).cwiseAbs().maxCoeff(); }
  double min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
  }
};

// Smallest truncation comfortably holding a cat of this amplitude.
inline int suggested_dim(double amp_mag) {
  const double x = amp_mag * amp_mag;
  return int(std::ceil(x + 8.0 * std::sqrt(x + 1.0))) + 1;
}

// Number-basis amplitudes of N(|a> + e^{i phi}|-a>) and the truncated norm deficit.
inline Eigen::VectorXcd cat_vector(const CatSpec& c, int dim, double* deficit = nullptr) {
  const double n2 = normalization<double>(c);
  const cplx al = c.amplitude(), ph = std::polar(1.0, c.rel_phase);
  Eigen::VectorXcd v(dim);
  cplx pw = std::exp(-0.5 * c.amp_mag * c.amp_mag);
  for (int n = 0; n < dim; ++n) {
    if (n > 0) pw *= al / std::sqrt(double(n));
    v(n) = std::sqrt(n2) * pw * (1.0 + ph * (n % 2 ? -1.0 : 1.0));
  }
  if (deficit) *deficit = 1.0 - v.squaredNorm();
  return v;
}

inline FockState build_initial(const CatPair& cats, int dim1, int dim2) {
  if (dim1 < 1 || dim2 < 1) throw DimTooSmall("dimensions must be positive");
  double d1 = 0, d2 = 0;
  const auto v1 = cat_vector(cats.signal, dim1, &d1);
  const auto v2 = cat_vector(cats.idler, dim2, &d2);
  if (d1 > 1e-10 || d2 > 1e-10) throw DimTooSmall("truncated cat misses norm " + sci(std::max(d1, d2)));
  Eigen::VectorXcd psi(dim1 * dim2);
  for (int a = 0; a < dim1; ++a)
    for (int b = 0; b < dim2; ++b) psi(a * dim2 + b) = v1(a) * v2(b);
  psi /= psi.norm();
  FockState s;
  s.dim1 = dim1;
  s.dim2 = dim2;
  s.rho = psi * psi.adjoint();
  return s;
}

namespace detail {

// exp(-i H t) restricted to each chain of fixed n1 - n2, where
// H = -g (e^{-i phi} a1 a2 + e^{i phi} a1^dag a2^dag).
inline FockState evolve_unitary(const FockState& s, const AmplifierParams& p, double t) {
  const int d1 = s.dim1, d2 = s.dim2;
  struct Block {
    std::vector<int> idx;
    Eigen::MatrixXcd U;
  };
  std::vector<Block> blocks;
  const cplx up = -p.g * std::polar(1.0, p.pump_phase);
  for (int k = -(d2 - 1); k <= d1 - 1; ++k) {
    Block b;
    for (int m = 0;; ++m) {
      const int n1 = m + std::max(k, 0), n2 = m + std::max(-k, 0);
      if (n1 >= d1 || n2 >= d2) break;
      b.idx.push_back(n1 * d2 + n2);
    }
    const int n = int(b.idx.size());
    Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(n, n);
    for (int m = 0; m + 1 < n; ++m) {
      const int n1 = m + std::max(k, 0), n2 = m + std::max(-k, 0);
      const cplx v = up * std::sqrt(double(n1 + 1) * double(n2 + 1));
      H(m + 1, m) = v;
      H(m, m + 1) = std::conj(v);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H);
    Eigen::VectorXcd ph(n);
    for (int i = 0; i < n; ++i) ph(i) = std::polar(1.0, -es.eigenvalues()(i) * t);
    b.U = es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
    blocks.push_back(std::move(b));
  }
  FockState out = s;
  for (const auto& a : blocks)
    for (const auto& b : blocks) {
      Eigen::MatrixXcd sub(a.idx.size(), b.idx.size());
      for (std::size_t i = 0; i < a.idx.size(); ++i)
        for (std::size_t j = 0; j < b.idx.size(); ++j) sub(i, j) = s.rho(a.idx[i], b.idx[j]);
      const Eigen::MatrixXcd r = a.U * sub * b.U.adjoint();
      for (std::size_t i = 0; i < a.idx.size(); ++i)
        for (std::size_t j = 0; j < b.idx.size(); ++j) out.rho(a.idx[i], b.idx[j]) = r(i, j);
    }
  return out;
}

// Right-hand side of the master equation with thermal dissipators
// gamma (nbar + 1) D[a] + gamma nbar D[a^dag] on each mode.
class Liouvillian {
 public:
  Liouvillian(int d1, int d2, const AmplifierParams& p) : d1_(d1), d2_(d2), D_(d1 * d2), p_(p) {
    n1_.resize(D_);
    n2_.resize(D_);
    for (int r = 0; r < D_; ++r) n1_[r] = r / d2, n2_[r] = r % d2;
    const int m = std::max(d1, d2) + 1;
    sq_.resize(m);
    for (int i = 0; i < m; ++i) sq_[i] = std::sqrt(double(i));
    hdown_ = -p.g * std::polar(1.0, -p.pump_phase);  // coefficient of a1 a2
    hup_ = -p.g * std::polar(1.0, p.pump_phase);     // of a1^dag a2^dag
    // half the anticommutator part, per basis index; a a^dag is truncated at the edge
    auto aad = [](int n, int d) { return n + 1 < d ? double(n + 1) : 0.0; };
    decay_.resize(D_);
    for (int r = 0; r < D_; ++r)
      decay_[r] = 0.5 * (p.gamma1 * (p.nbar1 + 1) * n1_[r] + p.gamma1 * p.nbar1 * aad(n1_[r], d1) +
                         p.gamma2 * (p.nbar2 + 1) * n2_[r] + p.gamma2 * p.nbar2 * aad(n2_[r], d2));
  }

  // rho is Hermitian and the map preserves that, so only r <= c is computed.
  void apply(const cplx* rho, cplx* out) const {
    const int D = D_, d1 = d1_, d2 = d2_, s1 = d2, s12 = d2 + 1;
    const double k1d = p_.gamma1 * (p_.nbar1 + 1), k1u = p_.gamma1 * p_.nbar1;
    const double k2d = p_.gamma2 * (p_.nbar2 + 1), k2u = p_.gamma2 * p_.nbar2;
    const bool loss1 = k1d != 0 || k1u != 0, loss2 = k2d != 0 || k2u != 0;
    const cplx mi(0, -1);
    for (int c = 0; c < D; ++c) {
      const int m1 = n1_[c], m2 = n2_[c];
      const cplx* col = rho + std::size_t(c) * D;
      const cplx* colm = c >= s12 ? rho + std::size_t(c - s12) * D : nullptr;
      const cplx* colp = c + s12 < D ? rho + std::size_t(c + s12) * D : nullptr;
      const cplx* col1m = c >= s1 ? rho + std::size_t(c - s1) * D : nullptr;
      const cplx* col1p = c + s1 < D ? rho + std::size_t(c + s1) * D : nullptr;
      const bool down_c = m1 > 0 && m2 > 0, up_c = m1 + 1 < d1 && m2 + 1 < d2;
      const cplx hc_down = down_c ? hdown_ * sq_[m1] * sq_[m2] : cplx{};
      const cplx hc_up = up_c ? hup_ * sq_[m1 + 1] * sq_[m2 + 1] : cplx{};
      const double j1d = m1 + 1 < d1 ? k1d * sq_[m1 + 1] : 0, j1u = m1 > 0 ? k1u * sq_[m1] : 0;
      const double j2d = m2 + 1 < d2 ? k2d * sq_[m2 + 1] : 0, j2u = m2 > 0 ? k2u * sq_[m2] : 0;
      cplx* o = out + std::size_t(c) * D;
      for (int r = 0; r <= c; ++r) {
        const int n1 = n1_[r], n2 = n2_[r];
        cplx h{};
        if (n1 + 1 < d1 && n2 + 1 < d2) h += hdown_ * sq_[n1 + 1] * sq_[n2 + 1] * col[r + s12];
        if (n1 > 0 && n2 > 0) h += hup_ * sq_[n1] * sq_[n2] * col[r - s12];
        if (down_c) h -= hc_down * colm[r];
        if (up_c) h -= hc_up * colp[r];
        cplx v = mi * h - (decay_[r] + decay_[c]) * col[r];
        if (loss1) {
          if (n1 + 1 < d1 && j1d != 0) v += j1d * sq_[n1 + 1] * col1p[r + s1];
          if (n1 > 0 && j1u != 0) v += j1u * sq_[n1] * col1m[r - s1];
        }
        if (loss2) {
          if (n2 + 1 < d2 && j2d != 0) v += j2d * sq_[n2 + 1] * col[std::size_t(D) + r + 1];
          if (n2 > 0 && j2u != 0) v += j2u * sq_[n2] * col[std::ptrdiff_t(r) - 1 - D];
        }
        o[r] = v;
      }
      for (int r = 0; r < c; ++r) out[std::size_t(r) * D + c] = std::conj(o[r]);
    }
  }

 private:
  int d1_, d2_, D_;
  AmplifierParams p_;
  std::vector<int> n1_, n2_;
  std::vector<double> sq_, decay_;
  cplx hdown_, hup_;
};

}  // namespace detail

// Fixed RK4 step used for lossy evolution.
inline double default_step(const AmplifierParams& p) {
  const double rate = std::max({p.gamma1, p.gamma2, 1e-300});
  double h = 1e-3 / rate;
  if (p.g > 0) h = std::min(h, 1e-3 / p.g);
  return h;
}

inline FockState evolve(const FockState& s, const AmplifierParams& p, double t, double step = 0) {
  if (!(t >= 0)) throw DomainError("time must be nonnegative");
  if (t == 0) return s;
  if (p.undamped_case()) return detail::evolve_unitary(s, p, t);
  const double h0 = step > 0 ? step : default_step(p);
  const long steps = std::max(1L, long(std::ceil(t / h0 - 1e-9)));
  const double h = t / double(steps);
  const detail::Liouvillian L(s.dim1, s.dim2, p);
  const Eigen::Index D = s.rho.rows();
  FockState out = s;
  Eigen::MatrixXcd k1(D, D), k2(D, D), k3(D, D), k4(D, D), tmp(D, D);
  Eigen::MatrixXcd& y = out.rho;
  const double tr0 = s.trace();
  for (long i = 0; i < steps; ++i) {
    L.apply(y.data(), k1.data());
    tmp = y + (h / 2) * k1;
    L.apply(tmp.data(), k2.data());
    tmp = y + (h / 2) * k2;
    L.apply(tmp.data(), k3.data());
    tmp = y + h * k3;
    L.apply(tmp.data(), k4.data());
    y += (h / 6) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  const double drift = std::abs(out.trace() - tr0);
  if (!(drift <= 1e-8)) throw StepSizeError("trace drifted by " + sci(drift));
  return out;
}

inline Eigen::MatrixXcd reduced(const FockState& s, int mode) {
  if (mode == 1) {
    Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(s.dim1, s.dim1);
    for (int a = 0; a < s.dim1; ++a)
      for (int b = 0; b < s.dim1; ++b)
        for (int k = 0; k < s.dim2; ++k) r(a, b) += s(a, k, b, k);
    return r;
  }
  if (mode == 2) {
    Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(s.dim2, s.dim2);
    for (int a = 0; a < s.dim2; ++a)
      for (int b = 0; b < s.dim2; ++b)
        for (int k = 0; k < s.dim1; ++k) r(a, b) += s(k, a, k, b);
    return r;
  }
  throw DomainError("mode must be 1 or 2");
}

inline std::vector<double> pnd_single(const FockState& s, int mode) {
  const auto r = reduced(s, mode);
  std::vector<double> p(r.rows());
  for (Eigen::Index n = 0; n < r.rows(); ++n) p[n] = r(n, n).real();
  return p;
}

inline std::vector<double> pnd_sum(const FockState& s) {
  std::vector<double> p(s.dim1 + s.dim2 - 1, 0.0);
  for (int a = 0; a < s.dim1; ++a)
    for (int b = 0; b < s.dim2; ++b) p[a + b] += s(a, b, a, b).real();
  return p;
}

// <a1^dag^m1 a1^n1 a2^dag^m2 a2^n2> with truncated ladder operators.
inline cplx expect_normal(const FockState& s, int m1, int n1, int m2, int n2) {
  auto op = [](int d, int m, int n) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(d, d);
    for (int k = 1; k < d; ++k) a(k - 1, k) = std::sqrt(double(k));
    Eigen::MatrixXd o = Eigen::MatrixXd::Identity(d, d);
    for (int i = 0; i < m; ++i) o = o * a.transpose();
    for (int i = 0; i < n; ++i) o = o * a;
    return o;
  };
  const auto O1 = op(s.dim1, m1, n1), O2 = op(s.dim2, m2, n2);
  cplx acc{};
  for (int i = 0; i < s.dim1; ++i)
    for (int k = 0; k < s.dim1; ++k) {
      if (O1(i, k) == 0) continue;
      for (int j = 0; j < s.dim2; ++j)
        for (int l = 0; l < s.dim2; ++l) {
          if (O2(j, l) == 0) continue;
          acc += O1(i, k) * O2(j, l) * s(k, l, i, j);
        }
    }
  return acc;
}

inline SqueezeFactors squeezing_single(const FockState& s, int mode) {
  const bool m1 = mode == 1;
  const cplx a = m1 ? expect_normal(s, 0, 1, 0, 0) : expect_normal(s, 0, 0, 0, 1);
  const cplx a2 = m1 ? expect_normal(s, 0, 2, 0, 0) : expect_normal(s, 0, 0, 0, 2);
  const cplx n = m1 ? expect_normal(s, 1, 1, 0, 0) : expect_normal(s, 0, 0, 1, 1);
  return {2 * a2.real() + 2 * n.real() - 4 * a.real() * a.real(),
          2 * n.real() - 2 * a2.real() - 4 * a.imag() * a.imag()};
}

inline SqueezeFactors squeezing_compound(const FockState& s) {
  const auto f1 = squeezing_single(s, 1), f2 = squeezing_single(s, 2);
  const cplx a1 = expect_normal(s, 0, 1, 0, 0), a2 = expect_normal(s, 0, 0, 0, 1);
  const double pair = expect_normal(s, 0, 1, 0, 1).real(), cross = expect_normal(s, 1, 0, 0, 1).real();
  return {(f1.S + f2.S) / 2 + 2 * pair + 2 * cross - 4 * a1.real() * a2.real(),
          (f1.Q + f2.Q) / 2 - 2 * pair + 2 * cross - 4 * a1.imag() * a2.imag()};
}

// Single-mode Wigner function from the reduced matrix in the number basis.
inline double wigner(const Eigen::MatrixXcd& r, cplx z) {
  const int d = int(r.rows());
  const double x = 4 * std::norm(z);
  double acc = 0;
  for (int k = 0; k < d; ++k) {
    const cplx zk = std::pow(2.0 * z, k);
    for (int m = 0; m + k < d; ++m) {
      const int n = m + k;
      const double f = std::exp(0.5 * (std::lgamma(m + 1.0) - std::lgamma(n + 1.0))) * laguerre<double>(m, k, x);
      const double sgn = m % 2 ? -1.0 : 1.0;
      const cplx term = sgn * f * r(m, n) * zk;
      acc += k == 0 ? term.real() : 2 * term.real();
    }
  }
  return 2.0 / kPi * std::exp(-2 * std::norm(z)) * acc;
}

inline double wigner(const FockState& s, cplx z, int mode = 1) { return wigner(reduced(s, mode), z); }

// Normally ordered k-th moment from the number distribution.
inline double factorial_moment(const std::vector<double>& p, int k) {
  double acc = 0;
  for (std::size_t n = 0; n < p.size(); ++n) {
    double ff = 1;
    for (int i = 0; i < k; ++i) ff *= double(n) - i;
    acc += p[n] * ff;
  }
  return acc;
}

}  // namespace catamp::oracle
