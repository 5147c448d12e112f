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

#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "retroeda/config.h"
#include "retroeda/errors.h"

namespace retroeda {
namespace {

TEST(RunConfig, DefaultsMatchTheSearchDefaults) {
  const RunConfig c;
  const EAConfig ea = c.ToEAConfig();
  EXPECT_EQ(ea.population_size, 42);
  EXPECT_EQ(ea.bins, 10);
  EXPECT_EQ(ea.k, 10);
  EXPECT_EQ(ea.max_iterations, 200);
  EXPECT_EQ(ea.objective, ObjectiveVariant::kStar);
  EXPECT_DOUBLE_EQ(c.ToMctsConfig().exploration, std::sqrt(2.0));
  EXPECT_EQ(c.BenchSeeds().size(), 30u);
  EXPECT_EQ(c.BenchSeeds().front(), 1u);
  EXPECT_EQ(c.BenchSeeds().back(), 30u);
}

TEST(RunConfig, SetAndGetEveryKey) {
  RunConfig c;
  c.Set("algo", "mcts");
  c.Set("population", "16");
  c.Set("objective", "roulette");
  c.Set("gen_beta_min", "0.25");
  c.Set("timing", "off");
  c.Set("worlds", "a, b,c");
  c.Set("seeds", "3-5,9");
  EXPECT_EQ(c.algo, Algorithm::kMcts);
  EXPECT_EQ(c.population_size, 16);
  EXPECT_EQ(c.objective, ObjectiveVariant::kRoulette);
  EXPECT_EQ(c.world_spec.beta_min, 0.25);
  EXPECT_FALSE(c.timing);
  EXPECT_EQ(c.worlds, (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(c.seeds, (std::vector<std::uint64_t>{3, 4, 5, 9}));
  EXPECT_EQ(c.Get("algo"), "mcts");
  EXPECT_EQ(c.Get("population"), "16");
  EXPECT_EQ(c.Get("worlds"), "a,b,c");
  EXPECT_EQ(c.Get("seeds"), "3,4,5,9");
}

TEST(RunConfig, RejectsUnknownKeysAndBadValues) {
  RunConfig c;
  EXPECT_THROW(c.Set("populaton", "10"), ConfigError);
  EXPECT_THROW(c.Set("population", "ten"), ConfigError);
  EXPECT_THROW(c.Set("population", "10x"), ConfigError);
  EXPECT_THROW(c.Set("algo", "bfs"), ConfigError);
  EXPECT_THROW(c.Set("objective", "sharp"), ConfigError);
  EXPECT_THROW(c.Set("timing", "maybe"), ConfigError);
  EXPECT_THROW(c.Set("algos", ""), ConfigError);
  EXPECT_THROW(c.Get("nope"), ConfigError);
}

TEST(RunConfig, TextRoundTripReproducesTheConfig) {
  RunConfig c;
  c.algo = Algorithm::kMcts;
  c.world_spec.seed = 77;
  c.world_spec.beta_max = 0.9;
  c.exploration = 0.7;
  c.seeds = {1, 4};
  c.worlds = {"w1", "w2"};
  c.timing = false;
  const std::string text = c.ToText();
  RunConfig back;
  std::istringstream in(text);
  ApplyConfigText(in, back);
  EXPECT_EQ(back.ToText(), text);
  EXPECT_EQ(back.world_spec.seed, 77u);
  EXPECT_EQ(back.exploration, 0.7);
}

TEST(RunConfig, ToTextListsEveryKeyOnce) {
  const std::string text = RunConfig{}.ToText();
  std::istringstream in(text);
  std::string line;
  std::set<std::string> keys;
  while (std::getline(in, line)) {
    const auto eq = line.find('=');
    ASSERT_NE(eq, std::string::npos) << line;
    EXPECT_TRUE(keys.insert(line.substr(0, eq)).second);
  }
  EXPECT_EQ(keys.size(), ConfigKeys().size());
  for (const auto& k : ConfigKeys()) EXPECT_TRUE(keys.contains(std::string(k.name)));
}

TEST(ApplyConfigText, SkipsCommentsAndReportsTheLine) {
  RunConfig c;
  std::istringstream good("# a comment\n\n  beam = 6 \nmax_depth=5\n");
  ApplyConfigText(good, c, "cfg");
  EXPECT_EQ(c.k, 6);
  EXPECT_EQ(c.max_depth, 5);

  std::istringstream bad("beam=6\nnot a pair\n");
  try {
    ApplyConfigText(bad, c, "cfg");
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("cfg:2"), std::string::npos) << e.what();
  }
}

TEST(ApplyConfigFile, MissingFileIsConfigError) {
  RunConfig c;
  EXPECT_THROW(ApplyConfigFile("/nonexistent/run.cfg", c), ConfigError);
}

TEST(ParseSeedList, RangesAndLists) {
  EXPECT_EQ(ParseSeedList("1-3"), (std::vector<std::uint64_t>{1, 2, 3}));
  EXPECT_EQ(ParseSeedList("4,7,9"), (std::vector<std::uint64_t>{4, 7, 9}));
  EXPECT_EQ(ParseSeedList("1-3,10"), (std::vector<std::uint64_t>{1, 2, 3, 10}));
  EXPECT_EQ(ParseSeedList("1-30").size(), 30u);
  EXPECT_THROW(ParseSeedList(""), ConfigError);
  EXPECT_THROW(ParseSeedList("5-2"), ConfigError);
  EXPECT_THROW(ParseSeedList("a-b"), ConfigError);
}

TEST(Algorithm, NamesRoundTrip) {
  EXPECT_EQ(ParseAlgorithm(ToString(Algorithm::kEa)), Algorithm::kEa);
  EXPECT_EQ(ParseAlgorithm(ToString(Algorithm::kMcts)), Algorithm::kMcts);
}

}  // namespace
}  // namespace retroeda
