#pragma once

// Built-in parameter presets for the published figures and the datasets
// behind them.

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "catamp/photon_stats.hpp"
#include "catamp/squeezing.hpp"
#include "catamp/wigner.hpp"

namespace catamp {

struct Table {
  std::string name;  // empty for the primary table
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

struct Dataset {
  std::string id;
  std::vector<Table> tables;
  std::vector<std::pair<std::string, double>> params;
  std::vector<std::pair<std::string, std::string>> labels;
  std::vector<std::pair<std::string, double>> metrics;
  std::vector<std::string> warnings;

  double metric(const std::string& key) const {
    for (const auto& [k, v] : metrics)
      if (k == key) return v;
    throw DomainError("no metric " + key);
  }
};

namespace figs {

inline void add_setup(Dataset& d, const std::string& prefix, const CatPair& c, const AmplifierParams& p, double t) {
  auto put = [&](const std::string& k, double v) { d.params.emplace_back(prefix + k, v); };
  put("signal.amp_mag", c.signal.amp_mag);
  put("signal.amp_phase", c.signal.amp_phase);
  put("signal.rel_phase", c.signal.rel_phase);
  put("idler.amp_mag", c.idler.amp_mag);
  put("idler.amp_phase", c.idler.amp_phase);
  put("idler.rel_phase", c.idler.rel_phase);
  put("g", p.g);
  put("pump_phase", p.pump_phase);
  put("gamma1", p.gamma1);
  put("gamma2", p.gamma2);
  put("nbar1", p.nbar1);
  put("nbar2", p.nbar2);
  put("t", t);
  put("mismatch_phase", mismatch_phase(p, c.signal, c.idler));
}

inline void warn_if(Dataset& d, bool cond, const std::string& what) {
  if (cond) d.warnings.push_back(what);
}

inline Dataset wigner_figure(const std::string& id, const CatPair& cats, const AmplifierParams& p, double t) {
  Dataset d;
  d.id = id;
  add_setup(d, "", cats, p, t);
  const auto s = evolve<double>(cats, p, t);
  const auto spec = default_grid(s);
  const auto grid = wigner_grid(s, spec);
  Table g{"", {"x", "y", "W"}, {}};
  g.rows.reserve(grid.values.size());
  for (int j = 0; j < spec.ny; ++j)
    for (int i = 0; i < spec.nx; ++i) g.rows.push_back({grid.x(i), grid.y(j), grid.at(i, j)});
  const int ncut = 801;
  const auto cut = wigner_cut(s, kDefaultCutY, spec.x_min, spec.x_max, ncut);
  Table c{"cut", {"x", "W"}, {}};
  for (int i = 0; i < ncut; ++i) c.rows.push_back({spec.x_min + (spec.x_max - spec.x_min) * i / (ncut - 1), cut[i]});
  d.tables = {std::move(g), std::move(c)};
  const double cmin = *std::min_element(cut.begin(), cut.end());
  const double cmax = *std::max_element(cut.begin(), cut.end());
  d.params.emplace_back("cut_y", kDefaultCutY);
  d.metrics = {{"cut_min", cmin},
               {"cut_max", cmax},
               {"cut_min_over_max", cmin / cmax},
               {"grid_min", grid.min()},
               {"grid_max", grid.max()},
               {"riemann_sum", grid.riemann_sum()},
               {"peak_count", double(grid.count_local_maxima(0.05))},
               {"max_imag_residue", grid.max_imag}};
  warn_if(d, grid.support_warning, "SupportWarning: grid boundary carries non-negligible W");
  warn_if(d, s.coeffs.near_singular, "NearSingularDenominator: noise coefficients from the limiting form");
  return d;
}

inline double mass(const std::vector<double>& p, int parity) {
  double s = 0;
  for (std::size_t n = parity; n < p.size(); n += 2) s += p[n];
  return s;
}

inline int argmax(const std::vector<double>& p) { return int(std::max_element(p.begin(), p.end()) - p.begin()); }

// Several single-mode or sum distributions side by side on a common n axis.
struct Curve {
  std::string label;
  CatPair cats;
  AmplifierParams p;
  double t;
};

inline Dataset pnd_figure(const std::string& id, const std::vector<Curve>& curves, bool sum, bool parts = false) {
  Dataset d;
  d.id = id;
  std::vector<EvolvedState<long double>> states;
  int n_max = 0;
  for (const auto& c : curves) {
    add_setup(d, c.label + ".", c.cats, c.p, c.t);
    states.push_back(evolve<long double>(c.cats, c.p, c.t));
    n_max = std::max(n_max, suggest_n_max(states.back(), sum ? Scope::Compound : Scope::Single, 1));
  }
  d.params.emplace_back("n_max", n_max);
  Table tab{"", {"n"}, {}};
  std::vector<std::vector<double>> cols;
  for (std::size_t i = 0; i < curves.size(); ++i) {
    const auto dist = sum ? sum_pnd(states[i], n_max) : single_pnd(1, states[i], n_max);
    const auto& lab = curves[i].label;
    warn_if(d, dist.truncation_warning, "TruncationWarning: " + lab);
    warn_if(d, states[i].coeffs.near_singular, "NearSingularDenominator: " + lab);
    tab.columns.push_back("P_" + lab);
    cols.push_back(dist.probs);
    if (parts) {
      tab.columns.insert(tab.columns.end(), {"P_M_" + lab, "P_SI_" + lab, "P_AI_" + lab});
      cols.push_back(dist.mixture);
      cols.push_back(dist.sym_interference);
      cols.push_back(dist.asym_interference);
    }
    double mean = 0;
    for (int n = 0; n <= n_max; ++n) mean += n * dist.probs[n];
    d.metrics.insert(d.metrics.end(), {{lab + ".sum", 1.0 - dist.tail_mass},
                                       {lab + ".tail_mass", dist.tail_mass},
                                       {lab + ".mean", mean},
                                       {lab + ".even_mass", mass(dist.probs, 0)},
                                       {lab + ".odd_mass", mass(dist.probs, 1)},
                                       {lab + ".argmax", double(argmax(dist.probs))}});
    if (parts) {
      auto mm = [](const std::vector<double>& v) { return std::minmax_element(v.begin(), v.end()); };
      for (auto [name, v] : {std::pair{"M", &dist.mixture}, std::pair{"SI", &dist.sym_interference},
                             std::pair{"AI", &dist.asym_interference}}) {
        double s = 0;
        for (double x : *v) s += x;
        const auto [lo, hi] = mm(*v);
        d.metrics.insert(d.metrics.end(), {{lab + "." + name + ".sum", s},
                                           {lab + "." + name + ".min", *lo},
                                           {lab + "." + name + ".max", *hi}});
      }
    }
  }
  for (int n = 0; n <= n_max; ++n) {
    std::vector<double> row{double(n)};
    for (const auto& c : cols) row.push_back(c[n]);
    tab.rows.push_back(std::move(row));
  }
  d.tables = {std::move(tab)};
  return d;
}

// Only the column set differs between the full distribution and its parts.
inline Dataset class_part_figure(const std::string& id, const Curve& c, int part) {
  auto full = pnd_figure(id, {c}, true, true);
  Dataset d = full;
  static const char* names[] = {"M", "SI", "AI"};
  const std::string key = names[part];
  Table t{"", {"n", "P_" + key}, {}};
  for (const auto& row : full.tables[0].rows) t.rows.push_back({row[0], row[2 + part]});
  d.tables = {std::move(t)};
  d.labels.emplace_back("part", key);
  return d;
}

inline CatPair pair(CatSpec a, CatSpec b) { return {a, b}; }

inline Dataset figure5() {
  Dataset d;
  d.id = "5";
  const double g = 1.0, t = 0.2, phi = kPi / 2;
  const double a1 = std::sqrt(0.7);
  const auto und = AmplifierParams::undamped(g, phi);
  const auto n0 = AmplifierParams::symmetric(g, phi, 2 * g - 1.6, 0.0);
  const auto n1 = AmplifierParams::symmetric(g, phi, 2 * g - 1.6, 0.1);
  add_setup(d, "ecs.", pair(CatSpec::even(a1), CatSpec::even(1)), und, t);
  add_setup(d, "damped_n0.", pair(CatSpec::even(a1), CatSpec::even(1)), n0, t);
  add_setup(d, "damped_n0.1.", pair(CatSpec::even(a1), CatSpec::even(1)), n1, t);
  Table tab{"", {"alpha2_sq", "Q_ecs", "Q_yss", "Q_ocs", "Q_ecs_damped_n0", "Q_ecs_damped_n0.1"}, {}};
  const int n = 300;
  double worst_order = 1e300;
  std::vector<double> mins(5, 1e300);
  for (int i = 1; i <= n; ++i) {
    const double x2 = 3.0 * i / n, a2 = std::sqrt(x2);
    auto q = [&](CatSpec idler, const AmplifierParams& p) {
      return single_mode_squeezing(1, pair(CatSpec::even(a1), idler), p, t).Q;
    };
    std::vector<double> row{x2,
                            q(CatSpec::even(a2), und),
                            q(CatSpec::yurke_stoler(a2), und),
                            q(CatSpec::odd(a2), und),
                            q(CatSpec::even(a2), n0),
                            q(CatSpec::even(a2), n1)};
    for (int k = 0; k < 5; ++k) mins[k] = std::min(mins[k], row[k + 1]);
    worst_order = std::min(worst_order, row[5] - row[4]);
    tab.rows.push_back(std::move(row));
  }
  d.tables = {std::move(tab)};
  const char* names[] = {"ecs", "yss", "ocs", "ecs_damped_n0", "ecs_damped_n0.1"};
  for (int k = 0; k < 5; ++k) d.metrics.emplace_back(std::string("min_Q_") + names[k], mins[k]);
  d.metrics.emplace_back("min_Q_n0.1_minus_Q_n0", worst_order);
  return d;
}

inline Dataset figure9(bool q) {
  Dataset d;
  d.id = q ? "9b" : "9a";
  const auto p = AmplifierParams::undamped(1.0, kPi / 2);
  const double t = 0.2, a = 0.7;
  add_setup(d, "", pair(CatSpec::even(a), CatSpec::even(a)), p, t);
  const int n = 73;  // 5 degree steps over [0, 2 pi]
  Table tab{"", {"psi1", "psi2", q ? "Q" : "S"}, {}};
  double best = 1e300, b1 = 0, b2 = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double p1 = kTwoPi * i / (n - 1), p2 = kTwoPi * j / (n - 1);
      const auto f = two_mode_squeezing(pair(CatSpec::even(a, p1), CatSpec::even(a, p2)), p, t);
      const double v = q ? f.Q : f.S;
      tab.rows.push_back({p1, p2, v});
      if (v < best - 1e-12) best = v, b1 = p1, b2 = p2;
    }
  d.tables = {std::move(tab)};
  d.metrics = {{"min", best}, {"argmin_psi1", b1}, {"argmin_psi2", b2}};
  return d;
}

inline Dataset figure10() {
  Dataset d;
  d.id = "10";
  const double g = 0.5, t = 0.2, phi = kPi / 2, a2 = 0.25;
  const int k = 5;
  const auto und = AmplifierParams::undamped(g, phi);
  const auto under = AmplifierParams::symmetric(g, phi, 2 * g - 0.6, 0.5);
  const auto over = AmplifierParams::symmetric(g, phi, 2 * g + 0.1, 0.5);
  add_setup(d, "ocs_ocs.", pair(CatSpec::odd(1), CatSpec::odd(a2)), und, t);
  add_setup(d, "ocs_ocs_under.", pair(CatSpec::odd(1), CatSpec::odd(a2)), under, t);
  add_setup(d, "ocs_ocs_over.", pair(CatSpec::odd(1), CatSpec::odd(a2)), over, t);
  d.params.emplace_back("k", k);
  Table tab{"", {"alpha1", "Kc_ocs_ocs", "Kc_ocs_ecs", "Kc_ocs_ocs_under", "Kc_ocs_ocs_over"}, {}};
  std::vector<double> mins(4, 1e300);
  for (int i = 0; i <= 295; ++i) {
    const double a1 = 0.05 + 0.01 * i;
    auto kc = [&](CatSpec idler, const AmplifierParams& p) {
      return factorial_moment(pair(CatSpec::odd(a1), idler), p, t, k, Scope::Compound).Kc;
    };
    std::vector<double> row{a1, kc(CatSpec::odd(a2), und), kc(CatSpec::even(a2), und), kc(CatSpec::odd(a2), under),
                            kc(CatSpec::odd(a2), over)};
    for (int c = 0; c < 4; ++c) mins[c] = std::min(mins[c], row[c + 1]);
    tab.rows.push_back(std::move(row));
  }
  d.tables = {std::move(tab)};
  const char* names[] = {"ocs_ocs", "ocs_ecs", "ocs_ocs_under", "ocs_ocs_over"};
  for (int c = 0; c < 4; ++c) d.metrics.emplace_back(std::string("min_Kc_") + names[c], mins[c]);
  d.metrics.emplace_back("antibunching_bound", -1.0);
  return d;
}

inline Curve fig6_curve(CatSpec idler = CatSpec::even(2)) {
  return {"ecs_ecs", pair(CatSpec::even(3), idler), AmplifierParams::undamped(1e4, kPi / 2), 3e-4};
}

inline Curve yss_curve(const std::string& label, double a1, double a2, const AmplifierParams& p) {
  return {label, pair(CatSpec::yurke_stoler(a1), CatSpec::yurke_stoler(a2)), p, 0.55};
}

inline const std::map<std::string, std::function<Dataset()>>& registry() {
  static const std::map<std::string, std::function<Dataset()>> r = {
      {"1a", [] { return wigner_figure("1a", pair(CatSpec::even(2), CatSpec::even(2)), AmplifierParams::undamped(1, kPi / 2), 0.55); }},
      {"1b", [] { return wigner_figure("1b", pair(CatSpec::even(3), CatSpec::even(2)), AmplifierParams::undamped(1, kPi / 2), 0.55); }},
      {"1c", [] { return wigner_figure("1c", pair(CatSpec::even(2), CatSpec::even(3)), AmplifierParams::undamped(1, kPi / 2), 0.55); }},
      {"2a", [] { return wigner_figure("2a", pair(CatSpec::even(3), CatSpec::even(2)), AmplifierParams::symmetric(1, kPi / 2, 2 + 3, 1), 0.55); }},
      {"2b", [] { return wigner_figure("2b", pair(CatSpec::even(3), CatSpec::even(2)), AmplifierParams::symmetric(1, kPi / 2, 2 - 1, 1), 0.55); }},
      {"3", [] {
         return pnd_figure("3", {yss_curve("psi_plus", 3, 2, AmplifierParams::undamped(1, kPi / 2)),
                                 yss_curve("psi_minus", 3, 2, AmplifierParams::undamped(1, -kPi / 2))}, false);
       }},
      {"4", [] {
         return pnd_figure("4", {yss_curve("undamped", 2, 3, AmplifierParams::undamped(1, kPi / 2)),
                                 yss_curve("underdamped", 2, 3, AmplifierParams::symmetric(1, kPi / 2, 2 - 1, 1)),
                                 yss_curve("overdamped", 2, 3, AmplifierParams::symmetric(1, kPi / 2, 2 + 1, 1))}, false);
       }},
      {"5", [] { return figure5(); }},
      {"6", [] { return pnd_figure("6", {fig6_curve()}, true); }},
      {"7a", [] { return class_part_figure("7a", fig6_curve(), 0); }},
      {"7b", [] { return class_part_figure("7b", fig6_curve(), 1); }},
      {"7c", [] { return class_part_figure("7c", fig6_curve(), 2); }},
      {"8a", [] { return pnd_figure("8a", {yss_curve("undamped", 3, 2, AmplifierParams::undamped(1, kPi / 2))}, true); }},
      {"8b", [] {
         return pnd_figure("8b", {yss_curve("underdamped", 3, 2, AmplifierParams::symmetric(0.5, kPi / 2, 1 - 0.9, 0.5)),
                                  yss_curve("overdamped", 3, 2, AmplifierParams::symmetric(0.5, kPi / 2, 1 + 0.1, 0.5))}, true);
       }},
      {"9a", [] { return figure9(false); }},
      {"9b", [] { return figure9(true); }},
      {"10", [] { return figure10(); }},
  };
  return r;
}

}  // namespace figs

inline std::vector<std::string> figure_ids() {
  return {"1a", "1b", "1c", "2a", "2b", "3", "4", "5", "6", "7a", "7b", "7c", "8a", "8b", "9a", "9b", "10"};
}

inline Dataset make_figure(const std::string& id) {
  const auto& r = figs::registry();
  const auto it = r.find(id);
  if (it == r.end()) throw UnknownFigure("unknown figure id '" + id + "'");
  return it->second();
}

}  // namespace catamp
