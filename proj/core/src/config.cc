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

#include "retroeda/config.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <istream>
#include <sstream>

#include "retroeda/errors.h"
#include "retroeda/expander.h"

namespace retroeda {
namespace {

std::string_view Trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> SplitList(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto pos = text.find(',', start);
    const auto item = Trim(text.substr(start, pos - start));
    if (!item.empty()) out.push_back(item);
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <typename T>
T ParseNumber(std::string_view key, std::string_view text) {
  text = Trim(text);
  T value{};
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw ConfigError("invalid value '" + std::string(text) + "' for " +
                      std::string(key));
  }
  return value;
}

bool ParseBool(std::string_view key, std::string_view text) {
  text = Trim(text);
  if (text == "1" || text == "true" || text == "on" || text == "yes") return true;
  if (text == "0" || text == "false" || text == "off" || text == "no") return false;
  throw ConfigError("invalid boolean '" + std::string(text) + "' for " +
                    std::string(key));
}

struct Field {
  ConfigKey key;
  std::function<void(RunConfig&, std::string_view)> set;
  std::function<std::string(const RunConfig&)> get;
};

template <typename T>
Field NumberField(std::string_view name, std::string_view help,
                  T RunConfig::*member) {
  return {{name, help},
          [name, member](RunConfig& c, std::string_view v) {
            c.*member = ParseNumber<T>(name, v);
          },
          [member](const RunConfig& c) {
            if constexpr (std::is_floating_point_v<T>) {
              return FormatDouble(c.*member);
            } else {
              return std::to_string(c.*member);
            }
          }};
}

template <typename T>
Field SpecField(std::string_view name, std::string_view help,
                T WorldSpec::*member) {
  return {{name, help},
          [name, member](RunConfig& c, std::string_view v) {
            c.world_spec.*member = ParseNumber<T>(name, v);
          },
          [member](const RunConfig& c) {
            if constexpr (std::is_floating_point_v<T>) {
              return FormatDouble(c.world_spec.*member);
            } else {
              return std::to_string(c.world_spec.*member);
            }
          }};
}

Field StringField(std::string_view name, std::string_view help,
                  std::string RunConfig::*member) {
  return {{name, help},
          [member](RunConfig& c, std::string_view v) {
            c.*member = std::string(Trim(v));
          },
          [member](const RunConfig& c) { return c.*member; }};
}

const std::vector<Field>& Fields() {
  static const std::vector<Field> fields = [] {
    std::vector<Field> f;
    f.push_back({{"algo", "search algorithm: ea | mcts"},
                 [](RunConfig& c, std::string_view v) { c.algo = ParseAlgorithm(Trim(v)); },
                 [](const RunConfig& c) { return std::string(ToString(c.algo)); }});
    f.push_back(StringField("world", "world directory (table.tsv, blocks.txt, manifest.tsv)",
                            &RunConfig::world_dir));
    f.push_back(StringField("table", "reaction-table file", &RunConfig::table_path));
    f.push_back(StringField("blocks", "building-block file", &RunConfig::blocks_path));
    f.push_back(StringField("target", "target molecule", &RunConfig::target));
    f.push_back(SpecField("gen_seed", "world generator seed", &WorldSpec::seed));
    f.push_back(SpecField("gen_k", "world candidates per molecule", &WorldSpec::k));
    f.push_back(SpecField("gen_depth", "planted route length", &WorldSpec::depth));
    f.push_back(SpecField("gen_blocks", "number of building blocks", &WorldSpec::block_count));
    f.push_back(SpecField("gen_decoy_depth", "decoy expansion levels", &WorldSpec::decoy_depth));
    f.push_back(SpecField("gen_beta_min", "lower beta bound", &WorldSpec::beta_min));
    f.push_back(SpecField("gen_beta_max", "upper beta bound", &WorldSpec::beta_max));
    f.push_back(SpecField("gen_alt_routes", "extra reconnecting routes", &WorldSpec::alt_routes));
    f.push_back(SpecField("gen_rank_decay", "planted rank decay (1 = uniform)", &WorldSpec::rank_decay));
    f.push_back(NumberField("population", "EA population size N", &RunConfig::population_size));
    f.push_back(NumberField("bins", "histogram bins M", &RunConfig::bins));
    f.push_back(NumberField("beam", "beam width k", &RunConfig::k));
    f.push_back(NumberField("max_depth", "genome length / max route depth D", &RunConfig::max_depth));
    f.push_back(NumberField("iterations", "EA iteration budget", &RunConfig::max_iterations));
    f.push_back({{"objective", "selection objective: star | hash | roulette"},
                 [](RunConfig& c, std::string_view v) {
                   c.objective = ParseObjectiveVariant(Trim(v));
                 },
                 [](const RunConfig& c) { return std::string(ToString(c.objective)); }});
    f.push_back(NumberField("stop_after", "stop after this many feasible routes (0 = off)",
                            &RunConfig::stop_after_solutions));
    f.push_back(NumberField("seed", "search seed", &RunConfig::seed));
    f.push_back(NumberField("workers", "parallel evaluation workers m", &RunConfig::workers));
    f.push_back(NumberField("snapshot_every", "EA population snapshot period (0 = off)",
                            &RunConfig::snapshot_every));
    f.push_back(NumberField("budget", "MCTS iteration budget", &RunConfig::mcts_budget));
    f.push_back(NumberField("exploration", "MCTS exploration constant c", &RunConfig::exploration));
    f.push_back(NumberField("brute_cap", "largest space the brute-force oracle accepts",
                            &RunConfig::brute_cap));
    f.push_back(StringField("out", "output directory", &RunConfig::out_dir));
    f.push_back({{"timing", "record wall-clock times (off = reproducible bytes)"},
                 [](RunConfig& c, std::string_view v) { c.timing = ParseBool("timing", v); },
                 [](const RunConfig& c) { return std::string(c.timing ? "on" : "off"); }});
    f.push_back({{"worlds", "bench: comma-separated world directories"},
                 [](RunConfig& c, std::string_view v) {
                   c.worlds.clear();
                   for (auto w : SplitList(v)) c.worlds.emplace_back(w);
                 },
                 [](const RunConfig& c) {
                   std::string s;
                   for (std::size_t i = 0; i < c.worlds.size(); ++i) {
                     if (i > 0) s += ',';
                     s += c.worlds[i];
                   }
                   return s;
                 }});
    f.push_back({{"algos", "bench: comma-separated algorithms"},
                 [](RunConfig& c, std::string_view v) {
                   c.algos.clear();
                   for (auto a : SplitList(v)) c.algos.push_back(ParseAlgorithm(a));
                   if (c.algos.empty()) throw ConfigError("algos must not be empty");
                 },
                 [](const RunConfig& c) {
                   std::string s;
                   for (std::size_t i = 0; i < c.algos.size(); ++i) {
                     if (i > 0) s += ',';
                     s += ToString(c.algos[i]);
                   }
                   return s;
                 }});
    f.push_back({{"seeds", "bench: seed list such as 1-30 or 1,2,5"},
                 [](RunConfig& c, std::string_view v) { c.seeds = ParseSeedList(v); },
                 [](const RunConfig& c) {
                   std::string s;
                   const auto seeds = c.BenchSeeds();
                   for (std::size_t i = 0; i < seeds.size(); ++i) {
                     if (i > 0) s += ',';
                     s += std::to_string(seeds[i]);
                   }
                   return s;
                 }});
    return f;
  }();
  return fields;
}

const Field& FindField(std::string_view key) {
  for (const auto& f : Fields()) {
    if (f.key.name == key) return f;
  }
  throw ConfigError("unknown config key '" + std::string(key) + "'");
}

}  // namespace

std::string_view ToString(Algorithm algo) {
  return algo == Algorithm::kEa ? "ea" : "mcts";
}

Algorithm ParseAlgorithm(std::string_view name) {
  if (name == "ea") return Algorithm::kEa;
  if (name == "mcts") return Algorithm::kMcts;
  throw ConfigError("unknown algorithm '" + std::string(name) + "'");
}

void RunConfig::Set(std::string_view key, std::string_view value) {
  FindField(Trim(key)).set(*this, value);
}

std::string RunConfig::Get(std::string_view key) const {
  return FindField(key).get(*this);
}

EAConfig RunConfig::ToEAConfig() const {
  EAConfig c;
  c.population_size = population_size;
  c.bins = bins;
  c.k = k;
  c.max_depth = max_depth;
  c.max_iterations = max_iterations;
  c.objective = objective;
  c.stop_after_solutions = stop_after_solutions;
  c.seed = seed;
  c.workers = workers;
  c.snapshot_every = snapshot_every;
  return c;
}

MctsConfig RunConfig::ToMctsConfig() const {
  MctsConfig c;
  c.exploration = exploration;
  c.budget = mcts_budget;
  c.max_depth = max_depth;
  c.k = k;
  c.seed = seed;
  c.stop_after_solutions = stop_after_solutions;
  return c;
}

std::vector<std::uint64_t> RunConfig::BenchSeeds() const {
  if (!seeds.empty()) return seeds;
  std::vector<std::uint64_t> s(30);
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = i + 1;
  return s;
}

std::string RunConfig::ToText() const {
  std::string out;
  for (const auto& f : Fields()) {
    out += f.key.name;
    out += '=';
    out += f.get(*this);
    out += '\n';
  }
  return out;
}

const std::vector<ConfigKey>& ConfigKeys() {
  static const std::vector<ConfigKey> keys = [] {
    std::vector<ConfigKey> k;
    for (const auto& f : Fields()) k.push_back(f.key);
    return k;
  }();
  return keys;
}

void ApplyConfigText(std::istream& in, RunConfig& config,
                     const std::string& source) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = Trim(line);
    if (body.empty() || body.front() == '#') continue;
    const auto eq = body.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(source + ":" + std::to_string(line_no) +
                        ": expected key=value");
    }
    try {
      config.Set(body.substr(0, eq), body.substr(eq + 1));
    } catch (const ConfigError& e) {
      throw ConfigError(source + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
}

void ApplyConfigFile(const std::string& path, RunConfig& config) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  ApplyConfigText(in, config, path);
}

std::vector<std::uint64_t> ParseSeedList(std::string_view text) {
  std::vector<std::uint64_t> seeds;
  for (const auto item : SplitList(text)) {
    const auto dash = item.find('-');
    if (dash == std::string_view::npos) {
      seeds.push_back(ParseNumber<std::uint64_t>("seeds", item));
      continue;
    }
    const auto lo = ParseNumber<std::uint64_t>("seeds", item.substr(0, dash));
    const auto hi = ParseNumber<std::uint64_t>("seeds", item.substr(dash + 1));
    if (hi < lo) throw ConfigError("empty seed range '" + std::string(item) + "'");
    for (auto s = lo; s <= hi; ++s) seeds.push_back(s);
  }
  if (seeds.empty()) throw ConfigError("seed list is empty");
  return seeds;
}

}  // namespace retroeda
