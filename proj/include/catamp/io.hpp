#pragma once

#include <cstdio>
#include <fstream>
#include <ostream>
#include <string>

#include "catamp/errors.hpp"
#include "catamp/figures.hpp"

namespace catamp {

inline std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline void write_csv(std::ostream& os, const Table& t) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << fmt17(row[i]);
    os << '\n';
  }
}

inline void write_csv_file(const std::string& path, const Table& t) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open " + path + " for writing");
  write_csv(f, t);
  if (!f) throw Error("write failed for " + path);
}

// "out/fig.csv" + "cut" -> "out/fig.cut.csv"
inline std::string companion_path(const std::string& path, const std::string& tag, const std::string& ext) {
  const auto slash = path.find_last_of('/');
  const auto dot = path.find_last_of('.');
  const std::string stem = (dot == std::string::npos || (slash != std::string::npos && dot < slash)) ? path : path.substr(0, dot);
  return stem + (tag.empty() ? "" : "." + tag) + "." + ext;
}

}  // namespace catamp
