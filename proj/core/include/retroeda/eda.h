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

#ifndef RETROEDA_EDA_H_
#define RETROEDA_EDA_H_

#include <cstdint>
#include <span>
#include <vector>

#include "retroeda/chem.h"
#include "retroeda/encoding.h"
#include "retroeda/expander.h"
#include "retroeda/random.h"
#include "retroeda/report.h"

namespace retroeda {

// Per-dimension histogram over [0, 1] with M bins.
//
// Bin 1 is [0, a1) and bin M is [a_{M-1}, 1]; they carry a fixed small mass
// (0.1) whenever they have positive width. The M-2 middle bins split
// [a1, a_{M-1}] evenly and are weighted by how many individuals fall in them.
// a1 and a_{M-1} sit half a gap outside the population's extreme values.
struct HistogramModel {
  int bins = 0;
  // boundaries[i] has bins + 1 entries, from 0 to 1.
  std::vector<std::vector<double>> boundaries;
  // probabilities[i] has bins entries summing to 1.
  std::vector<std::vector<double>> probabilities;

  std::size_t dimensions() const { return boundaries.size(); }
};

inline constexpr double kBoundaryBinMass = 0.1;

// Throws DegenerateConfig when bins < 3, the population has fewer than two
// members, or genomes differ in length. A dimension whose inner boundaries
// collapse (a1 >= a_{M-1}) falls back to M equal bins with uniform mass.
HistogramModel BuildModel(std::span<const Genome> population, int bins);

// Bin index (0-based, interior bins only) that counts `value`. Middle bins are
// half-open except the last one, which is closed.
int CountingBin(std::span<const double> boundaries, double value);

Genome SampleGenome(const HistogramModel& model, Rng& rng);
std::vector<Genome> Sample(const HistogramModel& model, std::size_t count,
                           Rng& rng);

// f_i / sum f; uniform when the sum is zero.
std::vector<double> RouletteWeights(std::span<const double> f_values);

// Survivors for the next generation. Star and hash keep the n best by
// objective (stable on ties). Roulette draws n without replacement with
// probability proportional to f.
std::vector<Individual> Select(std::vector<Individual> pool, std::size_t n,
                               ObjectiveVariant variant, Rng& rng);

struct EAConfig {
  int population_size = 42;
  int bins = 10;
  int k = 10;
  int max_depth = 4;
  int max_iterations = 200;
  ObjectiveVariant objective = ObjectiveVariant::kStar;
  int stop_after_solutions = 0;  // 0 disables
  std::uint64_t seed = 1;
  int workers = 1;
  int snapshot_every = 0;  // 0 disables population snapshots

  // Throws DegenerateConfig.
  void Validate() const;
};

// Histogram-EDA route search. Expander calls are counted through a
// per-run ExpansionCache, so repeated molecules cost one call.
SearchReport EaSearch(const Molecule& target, const EAConfig& config,
                      const Expander& expander, const BuildingBlockSet& blocks);

}  // namespace retroeda

#endif  // RETROEDA_EDA_H_
