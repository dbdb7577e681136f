#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "catamp/config.hpp"
#include "catamp/figures.hpp"
#include "catamp/io.hpp"
#include "catamp/oracle_check.hpp"

using namespace catamp;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0, kExitConfig = 2, kExitWarning = 3, kExitError = 1;
constexpr const char* kVersion = "0.1.0";

json table_json(const Table& t) {
  json j;
  j["columns"] = t.columns;
  j["rows"] = t.rows;
  return j;
}

json meta_json(const Dataset& d) {
  json j;
  j["id"] = d.id;
  j["version"] = kVersion;
  j["params"] = json::object();
  for (const auto& [k, v] : d.params) j["params"][k] = v;
  for (const auto& [k, v] : d.labels) j["labels"][k] = v;
  j["metrics"] = json::object();
  for (const auto& [k, v] : d.metrics) j["metrics"][k] = v;
  j["warnings"] = d.warnings;
  j["tables"] = json::array();
  for (const auto& t : d.tables) j["tables"].push_back({{"name", t.name}, {"columns", t.columns}, {"rows", t.rows.size()}});
  return j;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open " + path + " for writing");
  f << text;
  if (!f) throw Error("write failed for " + path);
}

// csv: primary table at `out`, extra tables next to it, metadata in a .json sidecar.
// json: everything in one file.
std::vector<std::string> write_dataset(const Dataset& d, const std::string& out, const std::string& format,
                                       const json* config = nullptr) {
  std::vector<std::string> written;
  json meta = meta_json(d);
  if (config) meta["config"] = *config;
  if (format == "json") {
    const std::string path = companion_path(out, "", "json");
    for (std::size_t i = 0; i < d.tables.size(); ++i) meta["tables"][i]["data"] = table_json(d.tables[i]);
    write_text(path, meta.dump(2) + "\n");
    written.push_back(path);
    return written;
  }
  for (const auto& t : d.tables) {
    const std::string path = t.name.empty() ? out : companion_path(out, t.name, "csv");
    write_csv_file(path, t);
    written.push_back(path);
  }
  const std::string side = companion_path(out, "", "json");
  write_text(side, meta.dump(2) + "\n");
  written.push_back(side);
  return written;
}

void report_warnings(const Dataset& d) {
  for (const auto& w : d.warnings) std::cerr << "warning: " << w << "\n";
}

int finish(const Dataset& d, bool strict) {
  report_warnings(d);
  return strict && !d.warnings.empty() ? kExitWarning : kExitOk;
}

RunConfig load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("config", "cannot read " + path);
  json j;
  try {
    j = json::parse(f);
  } catch (const json::parse_error& e) {
    throw ConfigError("config", std::string("invalid JSON: ") + e.what());
  }
  return cfgjson::from_json(j);
}

bool in_family(Observable o, const std::string& family) {
  if (family == "wigner") return o == Observable::WignerCut || o == Observable::WignerGrid;
  if (family == "pnd") return o == Observable::PndSingle || o == Observable::PndSum;
  if (family == "squeeze") return o == Observable::SqueezeSingle || o == Observable::SqueezeCompound;
  return true;
}

int run_sweep(const std::string& family, const std::string& config_path, const std::string& out_flag,
              const std::string& format_flag, bool strict) {
  RunConfig c = load_config(config_path);
  if (!in_family(c.observable, family))
    throw ConfigError("observable", std::string(to_string(c.observable)) + " is not a " + family + " observable");
  const std::string out = !out_flag.empty() ? out_flag : !c.output_path.empty() ? c.output_path : c.scenario + ".csv";
  const std::string fmt = !format_flag.empty() ? format_flag : c.output_format;
  const Dataset d = run_config(c);  // throws before anything is written
  const json cj = cfgjson::to_json(c);
  for (const auto& p : write_dataset(d, out, fmt, &cj)) std::cout << p << "\n";
  return finish(d, strict);
}

int run_oracle_check(const std::string& env, const std::string& out) {
  const auto cases = oracle::envelope(env);
  bool ok = true;
  json j = json::array();
  for (const auto& c : cases) {
    const auto r = oracle::compare(c);
    ok &= r.pass();
    std::printf("%-32s dims %dx%d  %-4s worst %.3e (tol %.0e, %.1f s)\n", c.label.c_str(), c.dim1, c.dim2,
                r.pass() ? "ok" : "FAIL", r.worst(), r.tolerance, r.seconds);
    json jc{{"case", c.label}, {"tolerance", r.tolerance}, {"pass", r.pass()}};
    for (const auto& d : r.devs) {
      std::printf("    %-22s %.3e\n", d.observable.c_str(), d.max_abs);
      jc["max_abs_deviation"][d.observable] = d.max_abs;
    }
    j.push_back(jc);
  }
  if (!out.empty()) write_text(out, j.dump(2) + "\n");
  return ok ? kExitOk : kExitWarning;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-mode cat states through a lossy nondegenerate parametric amplifier"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::string fig_id, out, format;
  bool strict = false;
  auto* fig = app.add_subcommand("figure", "write the dataset behind a figure");
  fig->add_option("id", fig_id, "figure id")->required();
  fig->add_option("--out", out, "output path (default fig<id>.csv)");
  fig->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  fig->add_flag("--strict", strict, "exit 3 on numeric warnings");

  auto* list = app.add_subcommand("list", "list figure ids");

  std::string config;
  std::vector<std::pair<std::string, CLI::App*>> sweeps;
  for (const auto& [name, help] : {std::pair{"scan", "sweep any observable"}, std::pair{"wigner", "Wigner cut or grid"},
                                   std::pair{"pnd", "photon-number distribution"}, std::pair{"squeeze", "squeezing factors"}}) {
    auto* sc = app.add_subcommand(name, help);
    sc->add_option("--config", config, "run configuration (JSON)")->required();
    sc->add_option("--out", out, "output path (overrides the config)");
    sc->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sc->add_flag("--strict", strict, "exit 3 on numeric warnings");
    sweeps.emplace_back(name, sc);
  }

  std::string env = "small";
  auto* oc = app.add_subcommand("oracle-check", "compare closed forms with the number-basis oracle");
  oc->add_option("--envelope", env, "small or full")->check(CLI::IsMember({"small", "full"}));
  oc->add_option("--out", out, "optional JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfig;
  }

  try {
    if (*fig) {
      const Dataset d = make_figure(fig_id);
      const std::string fmt = format.empty() ? "csv" : format;
      const std::string path = out.empty() ? "fig" + fig_id + "." + fmt : out;
      for (const auto& p : write_dataset(d, path, fmt)) std::cout << p << "\n";
      return finish(d, strict);
    }
    if (*list) {
      for (const auto& id : figure_ids()) std::cout << id << "\n";
      return kExitOk;
    }
    for (const auto& [name, sc] : sweeps)
      if (*sc) return run_sweep(name, config, out, format, strict);
    if (*oc) return run_oracle_check(env, out);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const UnknownFigure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitOk;
}
