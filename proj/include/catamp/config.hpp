#pragma once

// Run configurations for the generic sweep commands and their JSON form.

#include <cmath>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "catamp/figures.hpp"

namespace catamp {

struct ScanAxis {
  std::string param;
  double start = 0, stop = 0;
  int count = 0;

  double value(int i) const { return count == 1 ? start : start + (stop - start) * i / (count - 1); }
};

enum class Observable { SqueezeSingle, SqueezeCompound, PndSingle, PndSum, FactorialMoment, WignerCut, WignerGrid };

inline const char* to_string(Observable o) {
  switch (o) {
    case Observable::SqueezeSingle: return "squeeze_single";
    case Observable::SqueezeCompound: return "squeeze_compound";
    case Observable::PndSingle: return "pnd_single";
    case Observable::PndSum: return "pnd_sum";
    case Observable::FactorialMoment: return "factorial_moment";
    case Observable::WignerCut: return "wigner_cut";
    case Observable::WignerGrid: return "wigner_grid";
  }
  return "?";
}

inline Observable observable_from(const std::string& s) {
  for (auto o : {Observable::SqueezeSingle, Observable::SqueezeCompound, Observable::PndSingle, Observable::PndSum,
                 Observable::FactorialMoment, Observable::WignerCut, Observable::WignerGrid})
    if (s == to_string(o)) return o;
  throw ConfigError("observable", "unknown observable '" + s + "'");
}

struct RunConfig {
  std::string scenario = "run";
  CatPair cats{CatSpec::even(1), CatSpec::even(1)};
  AmplifierParams amp = AmplifierParams::undamped(1, kPi / 2);
  std::vector<double> times{0.5};
  Observable observable = Observable::SqueezeSingle;
  int mode = 1;
  int k = 2;                  // factorial moment order
  bool compound = false;      // factorial moment scope
  int n_max = 0;              // 0: automatic
  std::optional<GridSpec> grid;
  double cut_y = kDefaultCutY;
  int cut_points = 401;
  std::vector<ScanAxis> scans;
  std::string output_path;
  std::string output_format = "csv";
};

inline const std::vector<std::string>& scan_parameters() {
  static const std::vector<std::string> v = {
      "signal.amp_mag", "signal.amp_phase", "signal.rel_phase", "idler.amp_mag", "idler.amp_phase",
      "idler.rel_phase", "g", "pump_phase", "gamma", "gamma1", "gamma2", "nbar", "nbar1", "nbar2", "t"};
  return v;
}

// Raw assignment: phases are wrapped again when the configuration is used.
inline void set_parameter(RunConfig& c, double& t, const std::string& key, double v) {
  auto& s = c.cats.signal;
  auto& i = c.cats.idler;
  auto& a = c.amp;
  if (key == "signal.amp_mag") s.amp_mag = v;
  else if (key == "signal.amp_phase") s.amp_phase = v;
  else if (key == "signal.rel_phase") s.rel_phase = v;
  else if (key == "idler.amp_mag") i.amp_mag = v;
  else if (key == "idler.amp_phase") i.amp_phase = v;
  else if (key == "idler.rel_phase") i.rel_phase = v;
  else if (key == "g") a.g = v;
  else if (key == "pump_phase") a.pump_phase = v;
  else if (key == "gamma") a.gamma1 = a.gamma2 = v;
  else if (key == "gamma1") a.gamma1 = v;
  else if (key == "gamma2") a.gamma2 = v;
  else if (key == "nbar") a.nbar1 = a.nbar2 = v;
  else if (key == "nbar1") a.nbar1 = v;
  else if (key == "nbar2") a.nbar2 = v;
  else if (key == "t") t = v;
  else throw ConfigError("scan.param", "unknown parameter '" + key + "'");
}

// ---- JSON ----

namespace cfgjson {

using nlohmann::json;

inline void check_keys(const json& j, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) throw ConfigError(where, "expected an object");
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [k, v] : j.items())
    if (!ok.count(k)) throw ConfigError(where.empty() ? k : where + "." + k, "unknown key");
}

inline double num(const json& j, const std::string& field) {
  if (!j.is_number()) throw ConfigError(field, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ConfigError(field, "must be finite");
  return v;
}

inline int integer(const json& j, const std::string& field) {
  if (!j.is_number_integer()) throw ConfigError(field, "expected an integer");
  return j.get<int>();
}

inline json cat_to_json(const CatSpec& c) {
  return {{"amp_mag", c.amp_mag}, {"amp_phase", c.amp_phase}, {"rel_phase", c.rel_phase}};
}

inline CatSpec cat_from_json(const json& j, const std::string& where) {
  check_keys(j, where, {"kind", "amp_mag", "amp_phase", "rel_phase"});
  double rel = 0;
  if (j.contains("kind")) {
    const auto k = j["kind"].is_string() ? j["kind"].get<std::string>() : "";
    if (k == "even") rel = 0;
    else if (k == "odd") rel = kPi;
    else if (k == "yurke_stoler") rel = kPi / 2;
    else throw ConfigError(where + ".kind", "expected even, odd or yurke_stoler");
    if (j.contains("rel_phase")) throw ConfigError(where + ".rel_phase", "conflicts with kind");
  }
  if (!j.contains("amp_mag")) throw ConfigError(where + ".amp_mag", "missing");
  const double mag = num(j["amp_mag"], where + ".amp_mag");
  const double ph = j.contains("amp_phase") ? num(j["amp_phase"], where + ".amp_phase") : 0.0;
  if (j.contains("rel_phase")) rel = num(j["rel_phase"], where + ".rel_phase");
  if (mag < 0) throw ConfigError(where + ".amp_mag", "must be nonnegative");
  CatSpec c{mag, ph, rel};
  if (is_degenerate(CatSpec{mag, wrap_phase(ph), wrap_phase(rel)}))
    throw ConfigError(where, "odd cat with zero amplitude");
  return c;
}

inline json to_json(const RunConfig& c) {
  json j;
  j["scenario"] = c.scenario;
  j["signal"] = cat_to_json(c.cats.signal);
  j["idler"] = cat_to_json(c.cats.idler);
  j["amplifier"] = {{"g", c.amp.g},           {"pump_phase", c.amp.pump_phase}, {"gamma1", c.amp.gamma1},
                    {"gamma2", c.amp.gamma2}, {"nbar1", c.amp.nbar1},           {"nbar2", c.amp.nbar2}};
  j["times"] = c.times;
  j["observable"] = to_string(c.observable);
  j["mode"] = c.mode;
  j["k"] = c.k;
  j["scope"] = c.compound ? "compound" : "single";
  j["n_max"] = c.n_max;
  if (c.grid)
    j["grid"] = {{"x_min", c.grid->x_min}, {"x_max", c.grid->x_max}, {"y_min", c.grid->y_min},
                 {"y_max", c.grid->y_max}, {"nx", c.grid->nx},       {"ny", c.grid->ny}};
  j["cut_y"] = c.cut_y;
  j["cut_points"] = c.cut_points;
  j["scan"] = json::array();
  for (const auto& s : c.scans)
    j["scan"].push_back({{"param", s.param}, {"start", s.start}, {"stop", s.stop}, {"count", s.count}});
  j["output"] = {{"path", c.output_path}, {"format", c.output_format}};
  return j;
}

inline RunConfig from_json(const json& j) {
  check_keys(j, "", {"scenario", "signal", "idler", "amplifier", "times", "observable", "mode", "k", "scope", "n_max",
                     "grid", "cut_y", "cut_points", "scan", "output"});
  RunConfig c;
  if (j.contains("scenario")) {
    if (!j["scenario"].is_string()) throw ConfigError("scenario", "expected a string");
    c.scenario = j["scenario"].get<std::string>();
  }
  if (!j.contains("signal")) throw ConfigError("signal", "missing");
  if (!j.contains("idler")) throw ConfigError("idler", "missing");
  c.cats.signal = cat_from_json(j["signal"], "signal");
  c.cats.idler = cat_from_json(j["idler"], "idler");
  if (!j.contains("amplifier")) throw ConfigError("amplifier", "missing");
  const auto& a = j["amplifier"];
  check_keys(a, "amplifier", {"g", "pump_phase", "gamma", "gamma1", "gamma2", "nbar", "nbar1", "nbar2"});
  auto get = [&](const char* k, double def) { return a.contains(k) ? num(a[k], std::string("amplifier.") + k) : def; };
  c.amp.g = get("g", 1.0);
  c.amp.pump_phase = get("pump_phase", 0.0);
  c.amp.gamma1 = get("gamma1", get("gamma", 0.0));
  c.amp.gamma2 = get("gamma2", get("gamma", 0.0));
  c.amp.nbar1 = get("nbar1", get("nbar", 0.0));
  c.amp.nbar2 = get("nbar2", get("nbar", 0.0));
  for (auto [k, v] : {std::pair{"g", c.amp.g}, std::pair{"gamma1", c.amp.gamma1}, std::pair{"gamma2", c.amp.gamma2},
                      std::pair{"nbar1", c.amp.nbar1}, std::pair{"nbar2", c.amp.nbar2}})
    if (v < 0) throw ConfigError(std::string("amplifier.") + k, "must be nonnegative");
  if (j.contains("times")) {
    const auto& t = j["times"];
    c.times.clear();
    if (t.is_number()) {
      c.times.push_back(num(t, "times"));
    } else if (t.is_array()) {
      for (std::size_t i = 0; i < t.size(); ++i) c.times.push_back(num(t[i], "times[" + std::to_string(i) + "]"));
    } else {
      throw ConfigError("times", "expected a number or an array");
    }
    if (c.times.empty()) throw ConfigError("times", "empty");
    for (double v : c.times)
      if (v < 0) throw ConfigError("times", "must be nonnegative");
  }
  if (j.contains("observable")) {
    if (!j["observable"].is_string()) throw ConfigError("observable", "expected a string");
    c.observable = observable_from(j["observable"].get<std::string>());
  }
  if (j.contains("mode")) {
    c.mode = integer(j["mode"], "mode");
    if (c.mode != 1 && c.mode != 2) throw ConfigError("mode", "must be 1 or 2");
  }
  if (j.contains("k")) {
    c.k = integer(j["k"], "k");
    if (c.k < 1 || c.k > kMaxFactorialOrder) throw ConfigError("k", "out of range");
  }
  if (j.contains("scope")) {
    const auto s = j["scope"].is_string() ? j["scope"].get<std::string>() : "";
    if (s != "single" && s != "compound") throw ConfigError("scope", "expected single or compound");
    c.compound = s == "compound";
  }
  if (j.contains("n_max")) {
    c.n_max = integer(j["n_max"], "n_max");
    if (c.n_max < 0) throw ConfigError("n_max", "must be nonnegative");
  }
  if (j.contains("grid") && !j["grid"].is_null()) {
    const auto& g = j["grid"];
    check_keys(g, "grid", {"x_min", "x_max", "y_min", "y_max", "nx", "ny"});
    GridSpec s;
    for (auto [k, p] : {std::pair{"x_min", &s.x_min}, std::pair{"x_max", &s.x_max}, std::pair{"y_min", &s.y_min},
                        std::pair{"y_max", &s.y_max}}) {
      if (!g.contains(k)) throw ConfigError(std::string("grid.") + k, "missing");
      *p = num(g[k], std::string("grid.") + k);
    }
    if (g.contains("nx")) s.nx = integer(g["nx"], "grid.nx");
    if (g.contains("ny")) s.ny = integer(g["ny"], "grid.ny");
    if (s.nx < 1 || s.ny < 1) throw ConfigError("grid", "empty grid");
    if (!(s.x_max >= s.x_min) || !(s.y_max >= s.y_min)) throw ConfigError("grid", "reversed bounds");
    c.grid = s;
  }
  if (j.contains("cut_y")) c.cut_y = num(j["cut_y"], "cut_y");
  if (j.contains("cut_points")) {
    c.cut_points = integer(j["cut_points"], "cut_points");
    if (c.cut_points < 1) throw ConfigError("cut_points", "must be positive");
  }
  if (j.contains("scan")) {
    const json& sj = j["scan"];
    const json arr = sj.is_array() ? sj : json::array({sj});
    if (arr.size() > 2) throw ConfigError("scan", "at most two axes");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string w = "scan[" + std::to_string(i) + "]";
      check_keys(arr[i], w, {"param", "start", "stop", "count"});
      ScanAxis ax;
      if (!arr[i].contains("param") || !arr[i]["param"].is_string()) throw ConfigError(w + ".param", "missing");
      ax.param = arr[i]["param"].get<std::string>();
      bool known = false;
      for (const auto& p : scan_parameters()) known |= p == ax.param;
      if (!known) throw ConfigError(w + ".param", "unknown parameter '" + ax.param + "'");
      for (const char* k : {"start", "stop", "count"})
        if (!arr[i].contains(k)) throw ConfigError(w + "." + k, "missing");
      ax.start = num(arr[i]["start"], w + ".start");
      ax.stop = num(arr[i]["stop"], w + ".stop");
      ax.count = integer(arr[i]["count"], w + ".count");
      if (ax.count <= 0) throw ConfigError(w + ".count", "empty scan range");
      c.scans.push_back(ax);
    }
  }
  if (j.contains("output")) {
    const auto& o = j["output"];
    check_keys(o, "output", {"path", "format"});
    if (o.contains("path")) {
      if (!o["path"].is_string()) throw ConfigError("output.path", "expected a string");
      c.output_path = o["path"].get<std::string>();
    }
    if (o.contains("format")) {
      c.output_format = o["format"].is_string() ? o["format"].get<std::string>() : "";
      if (c.output_format != "csv" && c.output_format != "json") throw ConfigError("output.format", "expected csv or json");
    }
  }
  return c;
}

}  // namespace cfgjson

// ---- evaluation ----

namespace detail {

inline void append_observable(Dataset& d, Table& tab, const std::vector<double>& prefix, const RunConfig& c,
                              const CatPair& cats, const AmplifierParams& p, double t) {
  auto row = [&](std::initializer_list<double> tail) {
    std::vector<double> r = prefix;
    r.insert(r.end(), tail);
    tab.rows.push_back(std::move(r));
  };
  switch (c.observable) {
    case Observable::SqueezeSingle: {
      const auto f = single_mode_squeezing(c.mode, cats, p, t);
      row({f.S, f.Q});
      break;
    }
    case Observable::SqueezeCompound: {
      const auto f = two_mode_squeezing(cats, p, t);
      row({f.S, f.Q});
      break;
    }
    case Observable::FactorialMoment: {
      const auto f = factorial_moment(cats, p, t, c.k, c.compound ? Scope::Compound : Scope::Single, c.mode);
      row({f.moment, f.Kc});
      break;
    }
    case Observable::PndSingle:
    case Observable::PndSum: {
      const bool sum = c.observable == Observable::PndSum;
      const auto s = evolve<long double>(cats, p, t);
      const int n_max = c.n_max > 0 ? c.n_max : suggest_n_max(s, sum ? Scope::Compound : Scope::Single, c.mode);
      const auto dist = sum ? sum_pnd(s, n_max) : single_pnd(c.mode, s, n_max);
      if (dist.truncation_warning) d.warnings.push_back("TruncationWarning: tail mass " + std::to_string(dist.tail_mass));
      for (int n = 0; n <= n_max; ++n) {
        if (sum) row({double(n), dist.probs[n], dist.mixture[n], dist.sym_interference[n], dist.asym_interference[n]});
        else row({double(n), dist.probs[n]});
      }
      break;
    }
    case Observable::WignerCut:
    case Observable::WignerGrid: {
      const auto s = evolve<double>(cats, p, t);
      const GridSpec g = c.grid ? *c.grid : default_grid(s, c.mode);
      if (c.observable == Observable::WignerCut) {
        const auto cut = wigner_cut(s, c.cut_y, g.x_min, g.x_max, c.cut_points, c.mode);
        for (int i = 0; i < c.cut_points; ++i) {
          const double x = c.cut_points == 1 ? g.x_min : g.x_min + (g.x_max - g.x_min) * i / (c.cut_points - 1);
          row({x, cut[i]});
        }
      } else {
        const auto grid = wigner_grid(s, g, c.mode);
        if (grid.support_warning) d.warnings.push_back("SupportWarning: grid boundary carries non-negligible W");
        for (int jy = 0; jy < g.ny; ++jy)
          for (int ix = 0; ix < g.nx; ++ix) row({grid.x(ix), grid.y(jy), grid.at(ix, jy)});
      }
      break;
    }
  }
}

inline std::vector<std::string> observable_columns(const RunConfig& c) {
  switch (c.observable) {
    case Observable::SqueezeSingle:
    case Observable::SqueezeCompound: return {"S", "Q"};
    case Observable::FactorialMoment: return {"moment", "Kc"};
    case Observable::PndSingle: return {"n", "P"};
    case Observable::PndSum: return {"n", "P", "P_M", "P_SI", "P_AI"};
    case Observable::WignerCut: return {"x", "W"};
    case Observable::WignerGrid: return {"x", "y", "W"};
  }
  return {};
}

}  // namespace detail

// Evaluate the sweep: every scan point (first axis outermost) times every time.
inline Dataset run_config(const RunConfig& c) {
  for (const auto& s : c.scans)
    if (s.count <= 0) throw ConfigError("scan", "empty scan range");
  if (c.times.empty()) throw ConfigError("times", "empty");
  Dataset d;
  d.id = c.scenario;
  d.labels = {{"scenario", c.scenario}, {"observable", to_string(c.observable)}};
  Table tab{"", {}, {}};
  for (const auto& s : c.scans) tab.columns.push_back(s.param);
  tab.columns.push_back("t");
  for (const auto& col : detail::observable_columns(c)) tab.columns.push_back(col);

  const int n0 = c.scans.size() > 0 ? c.scans[0].count : 1;
  const int n1 = c.scans.size() > 1 ? c.scans[1].count : 1;
  const bool scan_t = std::any_of(c.scans.begin(), c.scans.end(), [](const ScanAxis& a) { return a.param == "t"; });
  const std::vector<double> times = scan_t ? std::vector<double>{c.times.front()} : c.times;
  for (int i = 0; i < n0; ++i)
    for (int k = 0; k < n1; ++k)
      for (double t0 : times) {
        RunConfig cur = c;
        double t = t0;
        std::vector<double> prefix;
        if (!c.scans.empty()) {
          set_parameter(cur, t, c.scans[0].param, c.scans[0].value(i));
          prefix.push_back(c.scans[0].value(i));
        }
        if (c.scans.size() > 1) {
          set_parameter(cur, t, c.scans[1].param, c.scans[1].value(k));
          prefix.push_back(c.scans[1].value(k));
        }
        prefix.push_back(t);
        CatPair cats;
        AmplifierParams p;
        try {
          cats = {CatSpec::make(cur.cats.signal.amp_mag, cur.cats.signal.amp_phase, cur.cats.signal.rel_phase),
                  CatSpec::make(cur.cats.idler.amp_mag, cur.cats.idler.amp_phase, cur.cats.idler.rel_phase)};
          p = AmplifierParams::make(cur.amp.g, cur.amp.pump_phase, cur.amp.gamma1, cur.amp.gamma2, cur.amp.nbar1,
                                    cur.amp.nbar2);
          if (!(t >= 0)) throw DomainError("time must be nonnegative");
          if (is_degenerate(cats.signal) || is_degenerate(cats.idler)) throw DegenerateCat("odd cat with zero amplitude");
        } catch (const Error& e) {
          throw ConfigError(c.scans.empty() ? "" : "scan", e.what());
        }
        detail::append_observable(d, tab, prefix, c, cats, p, t);
      }
  d.tables = {std::move(tab)};
  return d;
}

}  // namespace catamp
