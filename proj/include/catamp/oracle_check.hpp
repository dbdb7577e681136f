#pragma once

// Closed forms against the number-basis oracle, observable by observable.

#include <chrono>
#include <string>
#include <vector>

#include "catamp/oracle.hpp"
#include "catamp/wigner.hpp"

namespace catamp::oracle {

struct Case {
  std::string label;
  CatPair cats;
  AmplifierParams p;
  double t = 0;
  int dim1 = 25, dim2 = 25;
};

struct Deviation {
  std::string observable;
  double max_abs = 0;
};

struct Report {
  Case c;
  std::vector<Deviation> devs;
  double tolerance = 0;
  double seconds = 0;

  double worst() const {
    double w = 0;
    for (const auto& d : devs) w = std::max(w, d.max_abs);
    return w;
  }
  bool pass() const { return worst() <= tolerance; }
};

// 1e-6 without loss (exact propagator), 1e-4 with loss (RK4 at the default step).
inline double tolerance_for(const AmplifierParams& p) { return p.undamped_case() ? 1e-6 : 1e-4; }

inline Report compare(const Case& c, int wigner_points = 21, double wigner_half_width = 3.0) {
  const auto t0 = std::chrono::steady_clock::now();
  Report r;
  r.c = c;
  r.tolerance = tolerance_for(c.p);
  const auto fock = evolve(build_initial(c.cats, c.dim1, c.dim2), c.p, c.t);
  const auto s = catamp::evolve<long double>(c.cats, c.p, c.t);
  const auto sd = catamp::evolve<double>(c.cats, c.p, c.t);
  auto maxdiff = [](const std::vector<double>& a, const std::vector<double>& b, std::size_t n) {
    double m = 0;
    for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
  };
  for (int mode : {1, 2}) {
    const auto ref = pnd_single(fock, mode);
    const auto cf = single_pnd(mode, s, int(ref.size()) - 1);
    r.devs.push_back({"pnd_single_" + std::to_string(mode), maxdiff(ref, cf.probs, ref.size())});
  }
  {
    const auto ref = pnd_sum(fock);
    const int n = std::min(c.dim1, c.dim2);  // complete sums only
    const auto cf = sum_pnd(s, n - 1);
    r.devs.push_back({"pnd_sum", maxdiff(ref, cf.probs, std::size_t(n))});
  }
  for (int mode : {1, 2}) {
    const auto red = reduced(fock, mode);
    double m = 0;
    for (int i = 0; i < wigner_points; ++i)
      for (int j = 0; j < wigner_points; ++j) {
        const double x = -wigner_half_width + 2 * wigner_half_width * i / (wigner_points - 1);
        const double y = -wigner_half_width + 2 * wigner_half_width * j / (wigner_points - 1);
        const double w = wigner_value(sd, std::complex<double>(x, y), mode).real();
        m = std::max(m, std::abs(w - wigner(red, {x, y})));
      }
    r.devs.push_back({"wigner_" + std::to_string(mode), m});
  }
  {
    double m = 0;
    for (int mode : {1, 2}) {
      const auto a = single_mode_squeezing(mode, sd), b = squeezing_single(fock, mode);
      m = std::max({m, std::abs(a.S - b.S), std::abs(a.Q - b.Q)});
    }
    const auto a = two_mode_squeezing(sd), b = squeezing_compound(fock);
    m = std::max({m, std::abs(a.S - b.S), std::abs(a.Q - b.Q)});
    r.devs.push_back({"quadrature_variances", m});
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

// The small-instance envelope: |alpha_j| <= 1.2, gt <= 0.5, gamma in {0, 2g-1, 2g+1}, nbar in {0, 0.5, 1}.
inline std::vector<Case> envelope(const std::string& which) {
  const double g = 1.0, t = 0.5;
  std::vector<Case> v;
  v.push_back({"undamped ecs(1.2) x ocs(0.8)", {CatSpec::even(1.2), CatSpec::odd(0.8, 0.4)},
               AmplifierParams::undamped(g, kPi / 2), t, 30, 30});
  v.push_back({"undamped yss(1.0) x ecs(1.2)", {CatSpec::yurke_stoler(1.0, 0.3), CatSpec::even(1.2)},
               AmplifierParams::undamped(g, 0.7), 0.4, 30, 30});
  if (which == "small") {
    v.push_back({"underdamped nbar=0.5", {CatSpec::even(1.0), CatSpec::yurke_stoler(0.7)},
                 AmplifierParams::symmetric(g, kPi / 2, 2 * g - 1, 0.5), 0.3, 16, 16});
    return v;
  }
  if (which != "full") throw ConfigError("envelope", "expected small or full");
  v.push_back({"undamped ocs(1.2) x yss(1.2)", {CatSpec::odd(1.2), CatSpec::yurke_stoler(1.2, 1.1)},
               AmplifierParams::undamped(g, 2.0), t, 30, 30});
  for (double gamma : {2 * g - 1, 2 * g + 1})
    for (double nbar : {0.0, 0.5, 1.0}) {
      const std::string lab = std::string(gamma < 2 * g ? "underdamped" : "overdamped") + " nbar=" +
                              (nbar == 0 ? "0" : nbar == 1 ? "1" : "0.5");
      v.push_back({lab, {CatSpec::even(1.2), CatSpec::yurke_stoler(0.9, 0.5)},
                   AmplifierParams::symmetric(g, kPi / 2, gamma, nbar), t, 30, 30});
    }
  return v;
}

}  // namespace catamp::oracle
