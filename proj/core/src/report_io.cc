// Copyright 2026 The retroeda Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "retroeda/report_io.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "retroeda/encoding.h"
#include "retroeda/errors.h"
#include "retroeda/expander.h"

namespace retroeda {

std::string FormatWallMs(double wall_ms) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", wall_ms);
  return buf;
}

std::string FormatMetricsLine(std::string_view algo, std::uint64_t seed,
                              const SearchReport& report, double wall_ms) {
  std::string line(algo);
  line += '\t' + std::to_string(seed);
  line += '\t' + std::to_string(report.expander_calls);
  line += '\t' + std::to_string(report.iterations_run);
  line += '\t' + std::to_string(report.archive.size());
  line += '\t' + FormatWallMs(wall_ms);
  return line;
}

std::string FormatSeries(std::span<const double> values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) s += ',';
    s += FormatDouble(values[i]);
  }
  return s;
}

void WriteRoutes(std::ostream& out, std::span<const ArchivedRoute> routes) {
  for (const auto& r : routes) out << FormatRouteRecord(r.route, r.fit) << '\n';
}

void WriteMatrix(std::ostream& out,
                 const std::vector<std::vector<double>>& rows) {
  for (const auto& row : rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0) out << '\t';
      out << FormatDouble(row[j]);
    }
    out << '\n';
  }
}

void WriteSnapshots(const std::string& dir,
                    std::span<const PopulationSnapshot> snapshots) {
  if (snapshots.empty()) return;
  std::filesystem::create_directories(dir);
  for (const auto& snap : snapshots) {
    char name[64];
    std::snprintf(name, sizeof(name), "iter_%04d", snap.iteration);
    const auto base = std::filesystem::path(dir) / name;
    std::ofstream pop(base.string() + ".tsv", std::ios::binary);
    WriteMatrix(pop, snap.population);
    std::ofstream kids(base.string() + "_offspring.tsv", std::ios::binary);
    WriteMatrix(kids, snap.offspring);
    if (!pop || !kids) throw Error("failed to write snapshot under " + dir);
  }
}

}  // namespace retroeda
