// Acceptance criteria, one PASS/FAIL line each.  Exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include <unistd.h>

#include "catamp/figures.hpp"
#include "catamp/oracle_check.hpp"

using namespace catamp;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// 1. normalization over a random sweep
Outcome normalization_sweep() {
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> amp(0.05, 2.0), ph(0, kTwoPi), gt(0, 1), loss(0, 4), nb(0, 2);
  double worst_p = 0, worst_w = 0;
  for (int i = 0; i < 200; ++i) {
    const CatPair cats{CatSpec::make(amp(rng), ph(rng), ph(rng)), CatSpec::make(amp(rng), ph(rng), ph(rng))};
    const auto p = AmplifierParams::make(1.0, ph(rng), loss(rng), loss(rng), nb(rng), nb(rng));
    const double t = gt(rng);
    const auto s = evolve<long double>(cats, p, t);
    const auto sum = sum_pnd(s, suggest_n_max(s, Scope::Compound));
    worst_p = std::max(worst_p, std::abs(sum.tail_mass));
    for (int mode : {1, 2}) {
      const auto m = single_pnd(mode, s, suggest_n_max(s, Scope::Single, mode));
      worst_p = std::max(worst_p, std::abs(m.tail_mass));
      const auto sd = evolve<double>(cats, p, t);
      const auto g = wigner_grid(sd, default_grid(sd, mode, 201), mode);
      worst_w = std::max(worst_w, std::abs(g.riemann_sum() - 1));
    }
  }
  return {worst_p <= 1e-8 && worst_w <= 1e-3,
          fmt("max |sum P - 1| = %.2e (tol 1e-8), max |int W - 1| = %.2e (tol 1e-3), 200 points", worst_p, worst_w)};
}

// 2. closed forms against the number-basis oracle
Outcome oracle_equivalence() {
  double worst_u = 0, worst_d = 0;
  bool ok = true;
  int n = 0;
  for (const auto& c : oracle::envelope("full")) {
    const auto r = oracle::compare(c);
    ok &= r.pass();
    (c.p.undamped_case() ? worst_u : worst_d) = std::max(c.p.undamped_case() ? worst_u : worst_d, r.worst());
    ++n;
    if (!r.pass()) std::printf("       %s: worst %.3e > %.0e\n", c.label.c_str(), r.worst(), r.tolerance);
  }
  return {ok, fmt("%d cases; undamped worst %.2e (tol 1e-6), damped worst %.2e (tol 1e-4)", n, worst_u, worst_d)};
}

// 3. parity of the photon-number sum for even cats at high gain
Outcome parity_claim() {
  const auto d = make_figure("6");
  const double odd = d.metric("ecs_ecs.odd_mass");
  return {std::abs(odd) < 1e-10, fmt("odd mass %.2e (tol 1e-10), n_max %g", odd, d.params.back().second)};
}

// 4. Wigner negativity on the y = -0.25 cut appears only for |alpha1| > |alpha2|
Outcome negativity_switch() {
  const double a = make_figure("1a").metric("cut_min_over_max");
  const double b = make_figure("1b").metric("cut_min_over_max");
  const double c = make_figure("1c").metric("cut_min_over_max");
  return {b < -0.01 && a > -1e-3 && c > -1e-3,
          fmt("min/max on cut: (2,2) %.3e, (3,2) %.3e, (2,3) %.3e", a, b, c)};
}

// 5. regime morphology under thermal noise
Outcome regime_morphology() {
  const auto over = make_figure("2a"), under = make_figure("2b");
  const int po = int(over.metric("peak_count")), pu = int(under.metric("peak_count"));
  const double neg = over.metric("grid_min") / over.metric("grid_max");
  return {po == 1 && neg >= -1e-12 && pu == 2,
          fmt("overdamped: %d maxima, min/max %.2e; underdamped: %d maxima (want 1, >= 0, 2)", po, neg, pu)};
}

// 6. squeezing numerics
Outcome shape_minimum() {
  const auto [x, f] = even_q_shape_minimum();
  return {x >= 0.55 && x <= 0.80 && f > -0.30 && f < -0.25, fmt("argmin x = %.5f, min f = %.5f", x, f)};
}

Outcome compound_bound_maximum() {
  const auto m = maximize_two_mode_bound();
  const bool tau_ok = std::abs(m.tau - 0.1769) <= 0.002;
  const bool loc_ok = std::abs(m.a1 - 0.6) <= 0.05 && std::abs(m.a2 - 2.4) <= 0.05;
  return {tau_ok && loc_ok, fmt("tau = %.5f at |alpha| = (%.4f, %.4f), i.e. |alpha|^2 = (%.4f, %.4f); want 0.1769 at (0.6, 2.4)",
                                m.tau, m.a1, m.a2, m.x1, m.x2)};
}

Outcome odd_signal_never_squeezed() {
  const auto p = AmplifierParams::undamped(1, kPi / 2);
  double worst = 1e300;
  for (int i = 1; i <= 30; ++i)
    for (int j = 0; j <= 30; ++j)
      for (int k = 0; k <= 20; ++k) {
        const double a1 = 0.1 * i, a2 = 0.1 * j, t = 0.1 * k;
        worst = std::min(worst, single_mode_squeezing(1, {CatSpec::odd(a1), CatSpec::even(a2)}, p, t).Q);
      }
  return {worst >= -1e-12, fmt("min Q over 30x31x21 grid = %.3e", worst)};
}

Outcome survival_bracketing() {
  const auto sig = CatSpec::even(std::sqrt(0.7)), idl = CatSpec::even(1.0);
  const auto tb = squeeze_survival_time(sig, idl, 1.0);
  if (!tb) return {false, "no bound"};
  const auto p = AmplifierParams::undamped(1, kPi / 2);
  const double below = single_mode_squeezing(1, {sig, idl}, p, *tb * 0.999).Q;
  const double above = single_mode_squeezing(1, {sig, idl}, p, *tb * 1.001).Q;
  const bool none_ocs = !squeeze_survival_time(CatSpec::odd(1), CatSpec::even(1), 1.0).has_value();
  return {below < 0 && above >= 0 && none_ocs,
          fmt("gt* = %.6f; Q(0.999 t*) = %.3e, Q(1.001 t*) = %.3e; odd signal -> none: %s", *tb, below, above,
              none_ocs ? "yes" : "no")};
}

// 7. a Yurke-Stoler idler leaves only the mixture part
Outcome phase_decoherence() {
  const CatPair cats{CatSpec::even(3), CatSpec::yurke_stoler(2)};
  const auto s = evolve<long double>(cats, AmplifierParams::undamped(1e4, kPi / 2), 3e-4);
  const auto d = sum_pnd(s, suggest_n_max(s, Scope::Compound));
  double worst = 0, peak = 0, si = 0;
  for (std::size_t n = 0; n < d.probs.size(); ++n) {
    worst = std::max(worst, std::abs(d.probs[n] - d.mixture[n]));
    si = std::max(si, std::abs(d.sym_interference[n]));
    peak = std::max(peak, d.probs[n]);
  }
  return {worst <= 1e-12, fmt("max |P - P_M| = %.3e (tol 1e-12); SI part %.1e; peak P %.3e", worst, si, peak)};
}

// 8. compound Y squeezing is the mean of the single-mode factors
Outcome compound_decomposition() {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> amp(0.05, 2.0), gt(0, 1), ph(0, kTwoPi), loss(0, 3), nb(0, 1);
  double worst = 0;
  for (int i = 0; i < 50; ++i) {
    const CatPair cats{CatSpec::make(amp(rng), 0, ph(rng)), CatSpec::make(amp(rng), 0, ph(rng))};
    const auto p = i % 2 ? AmplifierParams::undamped(1, 0) : AmplifierParams::make(1, 0, loss(rng), loss(rng), nb(rng), nb(rng));
    const double t = gt(rng);
    const auto s = evolve<double>(cats, p, t);
    const double q = two_mode_squeezing(s).Q;
    const double q12 = 0.5 * (single_mode_squeezing(1, s).Q + single_mode_squeezing(2, s).Q);
    worst = std::max(worst, std::abs(q - q12));
  }
  return {worst <= 1e-12, fmt("max |Q - (Q1+Q2)/2| = %.2e over 50 points", worst)};
}

// 9. the CLI writes identical bytes on repeated runs
Outcome determinism(const std::string& cli) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("catamp_accept_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  auto run = [&](const std::string& name) {
    const std::string cmd = "\"" + cli + "\" figure 6 --out \"" + (dir / (name + ".csv")).string() + "\" > /dev/null";
    return std::system(cmd.c_str());
  };
  auto slurp = [](const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
  };
  const int r1 = run("a"), r2 = run("b");
  const auto a = slurp(dir / "a.csv"), b = slurp(dir / "b.csv");
  const auto ja = slurp(dir / "a.json"), jb = slurp(dir / "b.json");
  fs::remove_all(dir);
  const bool ok = r1 == 0 && r2 == 0 && !a.empty() && a == b && ja == jb;
  return {ok, fmt("exit codes %d/%d, csv %zu bytes, identical csv: %s, identical sidecar: %s", r1, r2, a.size(),
                  a == b ? "yes" : "no", ja == jb ? "yes" : "no")};
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "catamp";
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1  normalization sweep", normalization_sweep},
      {"2  oracle equivalence", oracle_equivalence},
      {"3  even-pair parity at high gain", parity_claim},
      {"4  Wigner negativity switch", negativity_switch},
      {"5  regime morphology", regime_morphology},
      {"6a shape-function minimum", shape_minimum},
      {"6b compound bound maximum", compound_bound_maximum},
      {"6c odd signal never Y-squeezed", odd_signal_never_squeezed},
      {"6d survival-time bracketing", survival_bracketing},
      {"7  phase decoherence", phase_decoherence},
      {"8  compound Y decomposition", compound_decomposition},
      {"9  CLI determinism", [&] { return determinism(cli); }},
  };
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failures += !o.pass;
    std::printf("%s  %-34s %s  [%.1f s]\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str(), sec);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures;
}
