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

#ifndef RETROEDA_CONFIG_H_
#define RETROEDA_CONFIG_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "retroeda/eda.h"
#include "retroeda/mcts.h"
#include "retroeda/world.h"

namespace retroeda {

enum class Algorithm { kEa, kMcts };

std::string_view ToString(Algorithm algo);
// Throws ConfigError.
Algorithm ParseAlgorithm(std::string_view name);

// Everything needed to reproduce a run or a bench matrix. Serialised as flat
// key=value lines; see ConfigKeys() for the recognised keys.
struct RunConfig {
  Algorithm algo = Algorithm::kEa;

  // World source, first match wins: `world` directory, then the
  // table/blocks/target triple, then generation from `world_spec`.
  std::string world_dir;
  std::string table_path;
  std::string blocks_path;
  std::string target;
  WorldSpec world_spec;

  int population_size = 42;
  int bins = 10;
  int k = 10;
  int max_depth = 4;
  int max_iterations = 200;
  ObjectiveVariant objective = ObjectiveVariant::kStar;
  int stop_after_solutions = 0;
  std::uint64_t seed = 1;
  int workers = 1;
  int snapshot_every = 0;

  int mcts_budget = 2000;
  double exploration = 1.4142135623730951;

  std::uint64_t brute_cap = 1'000'000;

  std::string out_dir = "out";
  // When false, wall-clock columns are written as 0 so outputs are
  // byte-reproducible.
  bool timing = true;

  // Bench matrix.
  std::vector<std::string> worlds;
  std::vector<Algorithm> algos = {Algorithm::kEa, Algorithm::kMcts};
  std::vector<std::uint64_t> seeds;  // empty means 1..30

  // Throws ConfigError on an unknown key or unparsable value.
  void Set(std::string_view key, std::string_view value);
  std::string Get(std::string_view key) const;

  EAConfig ToEAConfig() const;
  MctsConfig ToMctsConfig() const;
  std::vector<std::uint64_t> BenchSeeds() const;

  // key=value lines for every key, in ConfigKeys() order.
  std::string ToText() const;
};

struct ConfigKey {
  std::string_view name;
  std::string_view help;
};

const std::vector<ConfigKey>& ConfigKeys();

// Applies key=value lines onto `config`. Blank lines and '#' comments are
// skipped. Throws ConfigError with the offending line.
void ApplyConfigText(std::istream& in, RunConfig& config,
                     const std::string& source = "<stream>");
void ApplyConfigFile(const std::string& path, RunConfig& config);

// "1-30", "4,7,9" or a mix such as "1-3,10".
std::vector<std::uint64_t> ParseSeedList(std::string_view text);

}  // namespace retroeda

#endif  // RETROEDA_CONFIG_H_
