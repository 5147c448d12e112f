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

#ifndef RETROEDA_REPORT_IO_H_
#define RETROEDA_REPORT_IO_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "retroeda/report.h"

namespace retroeda {

// algo<TAB>seed<TAB>expander_calls<TAB>iterations<TAB>archive_size<TAB>wall_ms
std::string FormatMetricsLine(std::string_view algo, std::uint64_t seed,
                              const SearchReport& report, double wall_ms);

std::string FormatWallMs(double wall_ms);

// Comma-separated values on one line.
std::string FormatSeries(std::span<const double> values);

// One route record per line (see FormatRouteRecord).
void WriteRoutes(std::ostream& out, std::span<const ArchivedRoute> routes);

// Rows are individuals, tab-separated genes.
void WriteMatrix(std::ostream& out,
                 const std::vector<std::vector<double>>& rows);

// Snapshot files iter_NNNN.tsv (population) and iter_NNNN_offspring.tsv
// under `dir`.
void WriteSnapshots(const std::string& dir,
                    std::span<const PopulationSnapshot> snapshots);

}  // namespace retroeda

#endif  // RETROEDA_REPORT_IO_H_
