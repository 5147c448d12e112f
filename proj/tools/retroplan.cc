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

// retroplan: generate worlds, run searches, sweep the brute-force oracle and
// run bench matrices.
//
// Every config key is also a flag (--key value). Precedence is
// flag > --config file > built-in default.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "retroeda/config.h"
#include "retroeda/errors.h"
#include "retroeda/report_io.h"
#include "retroeda/runner.h"
#include "retroeda/world.h"

namespace {

constexpr int kExitError = 1;
constexpr int kExitConfig = 2;
constexpr int kExitBenchFailure = 3;

struct Command {
  CLI::App* app = nullptr;
  std::string config_file;
  std::map<std::string, std::string> flags;
};

Command AddCommand(CLI::App& root, const std::string& name,
                   const std::string& help) {
  Command cmd;
  cmd.app = root.add_subcommand(name, help);
  return cmd;
}

void AddConfigFlags(Command& cmd) {
  cmd.app->add_option("--config", cmd.config_file,
                      "key=value config file (flags override it)");
  for (const auto& key : retroeda::ConfigKeys()) {
    const std::string name(key.name);
    cmd.app->add_option_function<std::string>(
        "--" + name,
        [&cmd, name](const std::string& v) { cmd.flags[name] = v; },
        std::string(key.help));
  }
}

retroeda::RunConfig BuildConfig(const Command& cmd) {
  retroeda::RunConfig config;
  if (!cmd.config_file.empty()) retroeda::ApplyConfigFile(cmd.config_file, config);
  for (const auto& [key, value] : cmd.flags) config.Set(key, value);
  return config;
}

int GenWorld(const retroeda::RunConfig& config) {
  const auto world = retroeda::GenerateWorld(config.world_spec);
  retroeda::WriteWorld(config.out_dir, world);
  std::cout << world.target.text() << '\t' << world.depth << '\t'
            << world.table.size() << " products\t" << world.blocks.size()
            << " blocks\n";
  return 0;
}

int Search(const retroeda::RunConfig& config) {
  const auto world = retroeda::ResolveWorld(config);
  const auto outcome = retroeda::RunSearch(config, world);
  retroeda::WriteSearchOutputs(config.out_dir, config, outcome);
  std::cout << retroeda::FormatMetricsLine(retroeda::ToString(config.algo),
                                           config.seed, outcome.report,
                                           outcome.wall_ms)
            << '\n';
  return 0;
}

int Brute(const retroeda::RunConfig& config) {
  const auto world = retroeda::ResolveWorld(config);
  const auto result = retroeda::RunBrute(config, world);
  std::filesystem::create_directories(config.out_dir);
  const auto path = std::filesystem::path(config.out_dir) / "oracle.tsv";
  std::ofstream out(path, std::ios::binary);
  if (!out) throw retroeda::Error("cannot write " + path.string());
  retroeda::WriteOracle(out, result);
  std::cout << "max_f=" << retroeda::FormatDouble(result.max_f)
            << " feasible=" << result.feasible.size()
            << " evaluated=" << result.evaluated << '\n';
  return 0;
}

int Bench(const retroeda::RunConfig& config) {
  const auto matrix = retroeda::RunAndWriteBench(config);
  std::cout << matrix.cells.size() << " cells, " << matrix.aggregates.size()
            << " aggregates -> " << config.out_dir << '\n';
  if (matrix.AnyFailed()) {
    for (const auto& c : matrix.cells) {
      if (!c.ok) {
        std::cerr << "cell " << c.world << ' ' << retroeda::ToString(c.algo)
                  << " seed " << c.seed << ": " << c.error << '\n';
      }
    }
    return kExitBenchFailure;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Evolutionary retrosynthetic route planner"};
  app.require_subcommand(1);

  Command gen = AddCommand(app, "gen-world", "Generate a synthetic world");
  Command search = AddCommand(app, "search", "Run EA or MCTS on a world");
  Command brute = AddCommand(app, "brute", "Exhaustive oracle sweep");
  Command bench = AddCommand(app, "bench", "Run a worlds x algos x seeds matrix");
  std::string matrix_file;
  bench.app->add_option("matrix", matrix_file, "matrix file (key=value)");
  for (Command* cmd : {&gen, &search, &brute, &bench}) AddConfigFlags(*cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (gen.app->parsed()) return GenWorld(BuildConfig(gen));
    if (search.app->parsed()) return Search(BuildConfig(search));
    if (brute.app->parsed()) return Brute(BuildConfig(brute));
    if (bench.app->parsed()) {
      if (!matrix_file.empty() && bench.config_file.empty()) {
        bench.config_file = matrix_file;
      } else if (!matrix_file.empty()) {
        throw retroeda::ConfigError("give the matrix file or --config, not both");
      }
      return Bench(BuildConfig(bench));
    }
  } catch (const retroeda::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const retroeda::DegenerateConfig& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
