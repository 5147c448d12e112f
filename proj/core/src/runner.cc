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

#include "retroeda/runner.h"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>

#include "retroeda/eda.h"
#include "retroeda/errors.h"
#include "retroeda/mcts.h"
#include "retroeda/report_io.h"

namespace retroeda {
namespace {

namespace fs = std::filesystem;

std::ofstream OpenOut(const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  return out;
}

std::string CellLabel(std::size_t world_index, Algorithm algo,
                      std::uint64_t seed) {
  return "w" + std::to_string(world_index) + "_" + std::string(ToString(algo)) +
         "_s" + std::to_string(seed);
}

}  // namespace

World ResolveWorld(const RunConfig& config) {
  if (!config.world_dir.empty()) return LoadWorld(config.world_dir);
  const bool any_file = !config.table_path.empty() ||
                        !config.blocks_path.empty() || !config.target.empty();
  if (any_file) {
    if (config.table_path.empty() || config.blocks_path.empty() ||
        config.target.empty()) {
      throw ConfigError("table, blocks and target must be given together");
    }
    return World{LoadReactionTable(config.table_path),
                 LoadBuildingBlocks(config.blocks_path),
                 Molecule::Canonicalize(config.target),
                 0,
                 {},
                 {}};
  }
  return GenerateWorld(config.world_spec);
}

RunOutcome RunSearch(const RunConfig& config, const World& world) {
  const auto start = std::chrono::steady_clock::now();
  RunOutcome outcome;
  if (config.algo == Algorithm::kEa) {
    outcome.report =
        EaSearch(world.target, config.ToEAConfig(), world.table, world.blocks);
  } else {
    outcome.report =
        MctsSearch(world.target, config.ToMctsConfig(), world.table, world.blocks);
  }
  if (config.timing) {
    outcome.wall_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  }
  return outcome;
}

void WriteSearchOutputs(const std::string& dir, const RunConfig& config,
                        const RunOutcome& outcome) {
  const fs::path root(dir);
  fs::create_directories(root);
  {
    auto out = OpenOut(root / "metrics.tsv");
    out << "# algo\tseed\texpander_calls\titerations\tarchive_size\twall_ms\n"
        << FormatMetricsLine(ToString(config.algo), config.seed, outcome.report,
                             outcome.wall_ms)
        << '\n';
  }
  {
    auto out = OpenOut(root / "series.csv");
    out << FormatSeries(outcome.report.best_f_series) << '\n';
  }
  {
    auto out = OpenOut(root / "routes.tsv");
    WriteRoutes(out, outcome.report.archive);
  }
  {
    auto out = OpenOut(root / "run_config.txt");
    out << config.ToText();
  }
  WriteSnapshots((root / "snapshots").string(), outcome.report.snapshots);
}

BruteForceResult RunBrute(const RunConfig& config, const World& world) {
  return BruteForce(world.target, world.table, world.blocks, config.k,
                    config.max_depth, config.brute_cap);
}

void WriteOracle(std::ostream& out, const BruteForceResult& result) {
  out << FormatDouble(result.max_f) << '\t';
  for (std::size_t i = 0; i < result.best_ranks.size(); ++i) {
    if (i > 0) out << ',';
    out << result.best_ranks[i];
  }
  out << '\t' << result.evaluated << '\t' << result.feasible.size() << '\n';
  WriteRoutes(out, result.feasible);
}

MeanStd Summarize(const std::vector<double>& values) {
  MeanStd s;
  if (values.empty()) return s;
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double sq = 0.0;
    for (double v : values) sq += (v - s.mean) * (v - s.mean);
    s.stddev = std::sqrt(sq / static_cast<double>(values.size() - 1));
  }
  return s;
}

bool BenchMatrix::AnyFailed() const {
  for (const auto& c : cells) {
    if (!c.ok) return true;
  }
  return false;
}

namespace {

BenchMatrix RunBenchImpl(const RunConfig& config, const fs::path* out_root) {
  if (config.worlds.empty()) throw ConfigError("bench needs at least one world");
  const auto seeds = config.BenchSeeds();
  BenchMatrix matrix;

  for (std::size_t w = 0; w < config.worlds.size(); ++w) {
    const std::string& world_path = config.worlds[w];
    std::optional<World> world;
    std::string load_error;
    try {
      world = LoadWorld(world_path);
    } catch (const std::exception& e) {
      load_error = e.what();
    }

    for (const Algorithm algo : config.algos) {
      BenchAggregate agg;
      agg.world = world_path;
      agg.algo = algo;
      std::vector<double> calls, iters, sizes, walls;
      for (const std::uint64_t seed : seeds) {
        BenchCell cell;
        cell.world = world_path;
        cell.algo = algo;
        cell.seed = seed;
        if (!world) {
          cell.error = load_error;
        } else {
          try {
            RunConfig run = config;
            run.algo = algo;
            run.seed = seed;
            const RunOutcome outcome = RunSearch(run, *world);
            cell.ok = true;
            cell.expander_calls = outcome.report.expander_calls;
            cell.iterations = outcome.report.iterations_run;
            cell.archive_size = outcome.report.archive.size();
            cell.wall_ms = outcome.wall_ms;
            if (out_root != nullptr) {
              const std::string label = CellLabel(w, algo, seed);
              auto series = OpenOut(*out_root / "series" / (label + ".csv"));
              series << FormatSeries(outcome.report.best_f_series) << '\n';
              WriteSnapshots((*out_root / "snapshots" / label).string(),
                             outcome.report.snapshots);
            }
          } catch (const std::exception& e) {
            cell.ok = false;
            cell.error = e.what();
          }
        }
        ++agg.runs;
        if (cell.ok) {
          calls.push_back(static_cast<double>(cell.expander_calls));
          iters.push_back(cell.iterations);
          sizes.push_back(static_cast<double>(cell.archive_size));
          walls.push_back(cell.wall_ms);
        } else {
          ++agg.failures;
        }
        matrix.cells.push_back(std::move(cell));
      }
      agg.expander_calls = Summarize(calls);
      agg.iterations = Summarize(iters);
      agg.archive_size = Summarize(sizes);
      agg.wall_ms = Summarize(walls);
      matrix.aggregates.push_back(std::move(agg));
    }
  }
  return matrix;
}

std::string FormatMeanStd(const MeanStd& s) {
  return FormatDouble(s.mean) + '\t' + FormatDouble(s.stddev);
}

}  // namespace

BenchMatrix RunBench(const RunConfig& config) {
  return RunBenchImpl(config, nullptr);
}

BenchMatrix RunAndWriteBench(const RunConfig& config) {
  const fs::path root(config.out_dir);
  fs::create_directories(root / "series");
  BenchMatrix matrix = RunBenchImpl(config, &root);

  {
    auto out = OpenOut(root / "metrics.tsv");
    out << "# world\talgo\tseed\texpander_calls\titerations\tarchive_size"
           "\twall_ms\tstatus\n";
    for (const auto& c : matrix.cells) {
      out << c.world << '\t' << ToString(c.algo) << '\t' << c.seed << '\t'
          << c.expander_calls << '\t' << c.iterations << '\t' << c.archive_size
          << '\t' << FormatWallMs(c.wall_ms) << '\t'
          << (c.ok ? std::string("ok") : "error: " + c.error) << '\n';
    }
  }
  {
    auto out = OpenOut(root / "summary.tsv");
    out << "# world\talgo\truns\tfailures\tcalls_mean\tcalls_std\titer_mean"
           "\titer_std\tarchive_mean\tarchive_std\twall_ms_mean\twall_ms_std\n";
    for (const auto& a : matrix.aggregates) {
      out << a.world << '\t' << ToString(a.algo) << '\t' << a.runs << '\t'
          << a.failures << '\t' << FormatMeanStd(a.expander_calls) << '\t'
          << FormatMeanStd(a.iterations) << '\t' << FormatMeanStd(a.archive_size)
          << '\t' << FormatWallMs(a.wall_ms.mean) << '\t'
          << FormatWallMs(a.wall_ms.stddev) << '\n';
    }
  }
  {
    auto out = OpenOut(root / "run_config.txt");
    out << config.ToText();
  }
  return matrix;
}

}  // namespace retroeda
