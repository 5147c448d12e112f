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

#include "retroeda/encoding.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "retroeda/errors.h"

namespace retroeda {

Genome::Genome(std::vector<double> genes) : genes_(std::move(genes)) {
  for (double g : genes_) {
    if (!(g >= 0.0 && g <= 1.0)) {
      throw GeneOutOfRange("gene outside [0, 1]");
    }
  }
}

int MapGene(double gene, int k) {
  if (k < 1) throw Error("beam width must be at least 1");
  if (!(gene >= 0.0 && gene <= 1.0)) throw GeneOutOfRange("gene outside [0, 1]");
  // floor(gene * k) can round across a breakpoint; check against the exact
  // interval bounds and step once if needed.
  int lambda = static_cast<int>(std::floor(gene * k)) + 1;
  lambda = std::clamp(lambda, 1, k);
  while (lambda > 1 && gene < static_cast<double>(lambda - 1) / k) --lambda;
  while (lambda < k && gene >= static_cast<double>(lambda) / k) ++lambda;
  return lambda;
}

std::vector<int> MapGenes(const Genome& genome, int k) {
  std::vector<int> ranks;
  ranks.reserve(genome.size());
  for (double g : genome.genes()) ranks.push_back(MapGene(g, k));
  return ranks;
}

double MidpointGene(int rank, int k) {
  return (static_cast<double>(rank) - 0.5) / static_cast<double>(k);
}

std::string_view ToString(RouteStatus status) {
  switch (status) {
    case RouteStatus::kFeasible: return "Feasible";
    case RouteStatus::kTruncated: return "Truncated";
    case RouteStatus::kDepthExhausted: return "DepthExhausted";
    case RouteStatus::kInfeasible: return "Infeasible";
  }
  return "?";
}

std::vector<int> Route::ranks() const {
  std::vector<int> out;
  out.reserve(steps.size());
  for (const auto& s : steps) out.push_back(s.rank_used);
  return out;
}

Route DecodeRanks(std::span<const int> ranks, const Molecule& target,
                  const Expander& expander, const BuildingBlockSet& blocks,
                  int k) {
  if (blocks.empty()) throw EmptyBuildingBlockSet();
  Route route;
  if (blocks.Contains(target)) {
    route.status = RouteStatus::kFeasible;
    return route;
  }
  Molecule frontier = target;
  bool spoiled = false;
  for (int rank : ranks) {
    const ExpansionResult candidates = expander.Expand(frontier, k);
    if (candidates.empty()) {
      route.status = RouteStatus::kTruncated;
      route.frontier = frontier;
      return route;
    }
    const int used =
        std::clamp(rank, 1, static_cast<int>(candidates.size()));
    const Candidate& chosen = candidates[used - 1];

    RouteStep step;
    step.rank_used = used;
    step.candidate = chosen;
    const Molecule* next = nullptr;
    int non_members = 0;
    for (const auto& r : chosen.reactants) {
      if (blocks.Contains(r)) continue;
      ++non_members;
      if (next == nullptr || r.size() > next->size() ||
          (r.size() == next->size() && r < *next)) {
        next = &r;
      }
    }
    for (const auto& r : chosen.reactants) {
      if (&r != next) step.offchain.push_back(r);
    }
    if (non_members > 1) spoiled = true;
    if (next != nullptr) step.frontier_after = *next;
    route.betas.push_back(chosen.beta);
    route.steps.push_back(std::move(step));

    if (next == nullptr) {
      route.status = spoiled ? RouteStatus::kInfeasible : RouteStatus::kFeasible;
      return route;
    }
    frontier = *next;
  }
  route.status = RouteStatus::kDepthExhausted;
  route.frontier = frontier;
  return route;
}

Route Decode(const Genome& genome, const Molecule& target,
             const Expander& expander, const BuildingBlockSet& blocks, int k) {
  const auto ranks = MapGenes(genome, k);
  return DecodeRanks(ranks, target, expander, blocks, k);
}

FitnessRecord Fitness(const Route& route, const BuildingBlockSet& blocks) {
  FitnessRecord rec;
  for (double b : route.betas) rec.beta_product *= b;
  if (route.status == RouteStatus::kFeasible) {
    rec.g_value = 1.0;
  } else {
    double g = route.frontier ? blocks.SimilarityScore(*route.frontier) : 1.0;
    for (const auto& step : route.steps) {
      for (const auto& m : step.offchain) {
        if (!blocks.Contains(m)) g *= blocks.SimilarityScore(m);
      }
    }
    rec.g_value = g;
  }
  rec.f = rec.g_value * rec.beta_product;
  return rec;
}

std::string_view ToString(ObjectiveVariant variant) {
  switch (variant) {
    case ObjectiveVariant::kStar: return "star";
    case ObjectiveVariant::kHash: return "hash";
    case ObjectiveVariant::kRoulette: return "roulette";
  }
  return "?";
}

ObjectiveVariant ParseObjectiveVariant(std::string_view name) {
  if (name == "star") return ObjectiveVariant::kStar;
  if (name == "hash") return ObjectiveVariant::kHash;
  if (name == "roulette" || name == "roulette-weight") {
    return ObjectiveVariant::kRoulette;
  }
  throw ConfigError("unknown objective variant '" + std::string(name) + "'");
}

double Objective(double f, ObjectiveVariant variant) {
  switch (variant) {
    case ObjectiveVariant::kStar: return -f;
    case ObjectiveVariant::kHash: return -std::exp(f);
    case ObjectiveVariant::kRoulette: return f;
  }
  return f;
}

std::string FormatRouteRecord(const Route& route, const FitnessRecord& fit) {
  std::ostringstream out;
  out << ToString(route.status) << '\t' << route.steps_used() << '\t'
      << FormatDouble(fit.f) << '\t' << FormatDouble(fit.beta_product) << '\t'
      << FormatDouble(fit.g_value) << '\t';
  for (int i = 0; i < route.steps_used(); ++i) {
    if (i > 0) out << ',';
    out << route.steps[i].rank_used;
  }
  for (const auto& step : route.steps) {
    out << '\t' << step.rank_used << ':'
        << (step.frontier_after ? step.frontier_after->text() : "") << ':';
    for (std::size_t j = 0; j < step.offchain.size(); ++j) {
      if (j > 0) out << '.';
      out << step.offchain[j].text();
    }
  }
  return out.str();
}

}  // namespace retroeda
