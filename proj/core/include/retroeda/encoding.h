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

#ifndef RETROEDA_ENCODING_H_
#define RETROEDA_ENCODING_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "retroeda/chem.h"
#include "retroeda/expander.h"

namespace retroeda {

// Real-coded individual: one gene in [0, 1] per route step.
class Genome {
 public:
  Genome() = default;
  // Throws GeneOutOfRange if any gene lies outside [0, 1].
  explicit Genome(std::vector<double> genes);

  std::size_t size() const { return genes_.size(); }
  std::span<const double> genes() const { return genes_; }
  double operator[](std::size_t i) const { return genes_[i]; }

  friend bool operator==(const Genome&, const Genome&) = default;

 private:
  std::vector<double> genes_;
};

// Rank lambda in {1..k} with (lambda-1)/k <= gene < lambda/k; gene == 1 maps
// to k. Throws GeneOutOfRange outside [0, 1] and Error for k < 1.
int MapGene(double gene, int k);
std::vector<int> MapGenes(const Genome& genome, int k);

// Gene at the centre of rank's interval; MapGene(MidpointGene(r, k), k) == r.
double MidpointGene(int rank, int k);

enum class RouteStatus { kFeasible, kTruncated, kDepthExhausted, kInfeasible };

std::string_view ToString(RouteStatus status);

struct RouteStep {
  int rank_used = 0;                     // 1-based, after clamping
  Candidate candidate;
  std::optional<Molecule> frontier_after;  // carried to the next step
  std::vector<Molecule> offchain;          // every other reactant
};

struct Route {
  std::vector<RouteStep> steps;
  std::vector<double> betas;
  RouteStatus status = RouteStatus::kTruncated;
  // Last molecule still needing a disconnection; empty once the chain closes.
  std::optional<Molecule> frontier;

  int steps_used() const { return static_cast<int>(steps.size()); }
  // Ranks actually taken, one per step. Identifies the route.
  std::vector<int> ranks() const;
};

// Follows ranks[i] (clamped to the available candidates) at step i, starting
// at target. Every input yields a route. The chain continues through the
// longest non-member reactant (lexicographic tie-break); additional
// non-members make the route permanently infeasible. A target that is
// already a building block is a feasible zero-step route.
Route DecodeRanks(std::span<const int> ranks, const Molecule& target,
                  const Expander& expander, const BuildingBlockSet& blocks,
                  int k);

Route Decode(const Genome& genome, const Molecule& target,
             const Expander& expander, const BuildingBlockSet& blocks, int k);

struct FitnessRecord {
  double g_value = 0.0;
  double beta_product = 1.0;
  double f = 0.0;
};

// f = g * prod(beta). g is 1 for feasible routes; otherwise the similarity of
// the open frontier (1 if the chain closed) times the similarity of every
// off-chain non-member.
FitnessRecord Fitness(const Route& route, const BuildingBlockSet& blocks);

enum class ObjectiveVariant { kStar, kHash, kRoulette };

std::string_view ToString(ObjectiveVariant variant);
// Throws ConfigError on an unknown name.
ObjectiveVariant ParseObjectiveVariant(std::string_view name);

// Minimisation form used for ranking: star -> -f, hash -> -exp(f). Roulette
// returns the unnormalised selection weight f.
double Objective(double f, ObjectiveVariant variant);

// A genome together with its decoded route and fitness.
struct Individual {
  Genome genome;
  Route route;
  FitnessRecord fit;
};

// status, steps_used, f, beta_product, g_value, ranks (csv), then one
// rank:frontier:offchain field per step. Tab-separated, no newline.
std::string FormatRouteRecord(const Route& route, const FitnessRecord& fit);

}  // namespace retroeda

#endif  // RETROEDA_ENCODING_H_
