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

#ifndef RETROEDA_RUNNER_H_
#define RETROEDA_RUNNER_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "retroeda/config.h"
#include "retroeda/oracle.h"
#include "retroeda/report.h"
#include "retroeda/world.h"

namespace retroeda {

// Loads or generates the world named by the config. Throws ConfigError when
// the table/blocks/target triple is incomplete.
World ResolveWorld(const RunConfig& config);

struct RunOutcome {
  SearchReport report;
  double wall_ms = 0.0;  // 0 when config.timing is off
};

// Runs config.algo with config.seed on `world`.
RunOutcome RunSearch(const RunConfig& config, const World& world);

// metrics.tsv, series.csv, routes.tsv, run_config.txt and snapshots/.
void WriteSearchOutputs(const std::string& dir, const RunConfig& config,
                        const RunOutcome& outcome);

BruteForceResult RunBrute(const RunConfig& config, const World& world);

// Header line max_f<TAB>best_ranks<TAB>evaluated<TAB>feasible_count, then one
// route record per feasible route.
void WriteOracle(std::ostream& out, const BruteForceResult& result);

struct MeanStd {
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation; 0 for fewer than 2 values
};

MeanStd Summarize(const std::vector<double>& values);

struct BenchCell {
  std::string world;
  Algorithm algo = Algorithm::kEa;
  std::uint64_t seed = 0;
  bool ok = false;
  std::string error;
  std::uint64_t expander_calls = 0;
  int iterations = 0;
  std::size_t archive_size = 0;
  double wall_ms = 0.0;
};

struct BenchAggregate {
  std::string world;
  Algorithm algo = Algorithm::kEa;
  std::size_t runs = 0;
  std::size_t failures = 0;
  MeanStd expander_calls;
  MeanStd iterations;
  MeanStd archive_size;
  MeanStd wall_ms;
};

struct BenchMatrix {
  std::vector<BenchCell> cells;            // world-major, then algo, then seed
  std::vector<BenchAggregate> aggregates;  // one per (world, algo)

  bool AnyFailed() const;
};

// Runs every (world, algo, seed) cell of config.worlds x config.algos x
// config.BenchSeeds(). A failing cell is recorded and the rest continue.
BenchMatrix RunBench(const RunConfig& config);

// metrics.tsv (cells), summary.tsv (aggregates), series/ and snapshots/ under
// config.out_dir, plus run_config.txt.
BenchMatrix RunAndWriteBench(const RunConfig& config);

}  // namespace retroeda

#endif  // RETROEDA_RUNNER_H_
