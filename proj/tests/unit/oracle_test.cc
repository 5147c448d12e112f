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

#include <set>
#include <string>
#include <vector>

#include "retroeda/eda.h"
#include "retroeda/errors.h"
#include "retroeda/oracle.h"
#include "retroeda/world.h"

namespace retroeda {
namespace {

Molecule M(const std::string& s) { return Molecule::Canonicalize(s); }

TEST(BruteForce, PlantedWorldContainsPlantedRoute) {
  WorldSpec spec;
  spec.seed = 1;
  spec.k = 4;
  spec.depth = 3;
  const World w = GenerateWorld(spec);
  const auto result = BruteForce(w.target, w.table, w.blocks, 4, 3);
  EXPECT_EQ(result.evaluated, 64u);
  double product = 1.0;
  for (double b : w.planted_betas) product *= b;
  EXPECT_GE(result.max_f, product);
  bool found = false;
  for (const auto& r : result.feasible) {
    if (r.route.ranks() == w.planted_genes) {
      found = true;
      EXPECT_EQ(r.fit.f, product);
    }
  }
  EXPECT_TRUE(found);
}

TEST(BruteForce, NoRouteToBlocks) {
  ReactionTable::Entries e;
  e[M("T")] = {Candidate{{M("XA")}, 0.9}, Candidate{{M("XB")}, 0.5}};
  e[M("XA")] = {Candidate{{M("XC")}, 0.9}};
  const ReactionTable table(std::move(e));
  const BuildingBlockSet blocks({M("w")});
  const auto result = BruteForce(M("T"), table, blocks, 2, 3);
  EXPECT_TRUE(result.feasible.empty());
  EXPECT_LT(result.max_f, 1.0);
  EXPECT_EQ(result.evaluated, 8u);
}

TEST(BruteForce, SmallestInstance) {
  ReactionTable::Entries e;
  e[M("T")] = {Candidate{{M("w")}, 0.42}};
  const ReactionTable table(std::move(e));
  const BuildingBlockSet blocks({M("w")});
  const auto result = BruteForce(M("T"), table, blocks, 1, 1);
  ASSERT_EQ(result.feasible.size(), 1u);
  EXPECT_EQ(result.feasible[0].fit.f, 0.42);
  EXPECT_EQ(result.max_f, 0.42);
  EXPECT_EQ(result.best_ranks, std::vector<int>{1});
}

TEST(BruteForce, FirstMaximumWinsInEnumerationOrder) {
  // Ranks (1, x) and (2, x) close with the same f; (1, 1) comes first.
  ReactionTable::Entries e;
  e[M("T")] = {Candidate{{M("w")}, 0.5}, Candidate{{M("v")}, 0.5}};
  const ReactionTable table(std::move(e));
  const BuildingBlockSet blocks({M("w"), M("v")});
  const auto result = BruteForce(M("T"), table, blocks, 2, 2);
  EXPECT_EQ(result.best_ranks, (std::vector<int>{1, 1}));
  // Four rank vectors collapse onto two one-step routes.
  ASSERT_EQ(result.feasible.size(), 2u);
  EXPECT_EQ(result.feasible[0].route.ranks(), std::vector<int>{1});
  EXPECT_EQ(result.feasible[1].route.ranks(), std::vector<int>{2});
}

TEST(BruteForce, SpaceAboveCapThrows) {
  const ReactionTable table;
  const BuildingBlockSet blocks({M("w")});
  EXPECT_THROW(BruteForce(M("T"), table, blocks, 10, 7), SpaceTooLarge);
  EXPECT_THROW(BruteForce(M("T"), table, blocks, 4, 3, 63), SpaceTooLarge);
  EXPECT_NO_THROW(BruteForce(M("T"), table, blocks, 4, 3, 64));
}

TEST(BruteForce, FeasibleSetCoversSearchArchives) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    WorldSpec spec;
    spec.seed = seed;
    spec.k = 4;
    spec.depth = 3;
    const World w = GenerateWorld(spec);
    const auto brute = BruteForce(w.target, w.table, w.blocks, 4, 3);
    std::set<std::vector<int>> feasible;
    for (const auto& r : brute.feasible) {
      EXPECT_EQ(r.route.status, RouteStatus::kFeasible);
      EXPECT_TRUE(feasible.insert(r.route.ranks()).second);
    }
    EAConfig config;
    config.population_size = 16;
    config.k = 4;
    config.max_depth = 3;
    config.max_iterations = 30;
    config.seed = seed;
    const auto report = EaSearch(w.target, config, w.table, w.blocks);
    for (const auto& r : report.archive) {
      EXPECT_TRUE(feasible.contains(r.route.ranks()));
      EXPECT_LE(r.fit.f, brute.max_f);
    }
  }
}

}  // namespace
}  // namespace retroeda
