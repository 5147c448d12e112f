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

#include <map>
#include <mutex>
#include <thread>
#include <vector>

#include "retroeda/errors.h"
#include "retroeda/parallel.h"
#include "retroeda/random.h"
#include "retroeda/world.h"

namespace retroeda {
namespace {

// Records which thread expanded the target.
class ThreadTally : public Expander {
 public:
  ThreadTally(const Expander& inner, Molecule target)
      : inner_(inner), target_(std::move(target)) {}

  ExpansionResult Expand(const Molecule& m, int k) const override {
    if (m == target_) {
      std::lock_guard lock(mutex_);
      ++per_thread[std::this_thread::get_id()];
    }
    return inner_.Expand(m, k);
  }

  mutable std::map<std::thread::id, int> per_thread;

 private:
  const Expander& inner_;
  Molecule target_;
  mutable std::mutex mutex_;
};

std::vector<Genome> RandomGenomes(std::size_t n, std::size_t dims, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Genome> out;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<double> g(dims);
    for (auto& x : g) x = UniformClosed(rng);
    out.emplace_back(g);
  }
  return out;
}

World TestWorld() {
  WorldSpec spec;
  spec.seed = 21;
  spec.k = 6;
  spec.depth = 4;
  return GenerateWorld(spec);
}

TEST(AssignWorker, Examples) {
  EXPECT_EQ(AssignWorker(5, 3), 2u);
  EXPECT_EQ(AssignWorker(0, 4), 0u);
  EXPECT_EQ(AssignWorker(7, 1), 0u);
}

TEST(AssignWorker, ZeroWorkersThrows) {
  EXPECT_THROW(AssignWorker(3, 0), ZeroWorkers);
}

TEST(AssignWorker, FortyTwoOverThreeIsFourteenEach) {
  std::vector<int> load(3, 0);
  for (std::size_t j = 0; j < 42; ++j) ++load[AssignWorker(j, 3)];
  // Residue classes of 0..41 modulo 3 each hold 42 / 3 members.
  EXPECT_EQ(load, (std::vector<int>{14, 14, 14}));
}

TEST(ParallelEvaluate, ThreeWorkersTakeFourteenGenomesEach) {
  const World w = TestWorld();
  ThreadTally tally(w.table, w.target);
  const EvalContext ctx{w.target, tally, w.blocks, 6};
  const auto genomes = RandomGenomes(42, 4, 1);
  ParallelEvaluate(genomes, ctx, 3);
  ASSERT_EQ(tally.per_thread.size(), 3u);
  for (const auto& [id, count] : tally.per_thread) {
    EXPECT_NE(id, std::this_thread::get_id());
    EXPECT_EQ(count, 14);
  }
}

TEST(ParallelEvaluate, OneWorkerRunsOnTheCallingThread) {
  const World w = TestWorld();
  ThreadTally tally(w.table, w.target);
  const EvalContext ctx{w.target, tally, w.blocks, 6};
  ParallelEvaluate(RandomGenomes(10, 4, 2), ctx, 1);
  ASSERT_EQ(tally.per_thread.size(), 1u);
  EXPECT_EQ(tally.per_thread.begin()->first, std::this_thread::get_id());
}

TEST(ParallelEvaluate, MatchesSequentialForAnyWorkerCount) {
  const World w = TestWorld();
  const auto genomes = RandomGenomes(42, 4, 3);
  std::vector<Individual> sequential;
  {
    const EvalContext ctx{w.target, w.table, w.blocks, 6};
    for (const auto& g : genomes) sequential.push_back(Evaluate(g, ctx));
  }
  ExpansionCache reference_cache(w.table, 6);
  {
    const EvalContext ctx{w.target, reference_cache, w.blocks, 6};
    ParallelEvaluate(genomes, ctx, 1);
  }
  for (std::size_t m : {1u, 2u, 3u, 8u, 50u}) {
    ExpansionCache cache(w.table, 6);
    const EvalContext ctx{w.target, cache, w.blocks, 6};
    const auto out = ParallelEvaluate(genomes, ctx, m);
    ASSERT_EQ(out.size(), sequential.size());
    for (std::size_t j = 0; j < out.size(); ++j) {
      EXPECT_EQ(out[j].genome, sequential[j].genome);
      EXPECT_EQ(out[j].fit.f, sequential[j].fit.f);
      EXPECT_EQ(out[j].fit.g_value, sequential[j].fit.g_value);
      EXPECT_EQ(out[j].route.ranks(), sequential[j].route.ranks());
      EXPECT_EQ(out[j].route.status, sequential[j].route.status);
    }
    EXPECT_EQ(cache.calls(), reference_cache.calls()) << "m=" << m;
  }
}

TEST(ParallelEvaluate, EmptyInputGivesEmptyOutputAndNoCalls) {
  const World w = TestWorld();
  ExpansionCache cache(w.table, 6);
  const EvalContext ctx{w.target, cache, w.blocks, 6};
  EXPECT_TRUE(ParallelEvaluate({}, ctx, 4).empty());
  EXPECT_EQ(cache.calls(), 0u);
}

TEST(ParallelEvaluate, ZeroWorkersThrows) {
  const World w = TestWorld();
  const EvalContext ctx{w.target, w.table, w.blocks, 6};
  EXPECT_THROW(ParallelEvaluate(RandomGenomes(3, 4, 4), ctx, 0), ZeroWorkers);
}

TEST(DeriveSeed, DependsOnEveryComponent) {
  EXPECT_EQ(DeriveSeed(1, 2, 3), DeriveSeed(1, 2, 3));
  EXPECT_NE(DeriveSeed(1, 2, 3), DeriveSeed(2, 2, 3));
  EXPECT_NE(DeriveSeed(1, 2, 3), DeriveSeed(1, 3, 3));
  EXPECT_NE(DeriveSeed(1, 2, 3), DeriveSeed(1, 2, 4));
}

TEST(UniformHelpers, StayInRange) {
  Rng rng(5);
  for (int i = 0; i < 100000; ++i) {
    const double open = UniformOpen(rng);
    EXPECT_GE(open, 0.0);
    EXPECT_LT(open, 1.0);
    const double closed = UniformClosed(rng);
    EXPECT_GE(closed, 0.0);
    EXPECT_LE(closed, 1.0);
    EXPECT_LT(UniformIndex(rng, 7), 7u);
  }
}

}  // namespace
}  // namespace retroeda
