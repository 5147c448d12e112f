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

#ifndef RETROEDA_REPORT_H_
#define RETROEDA_REPORT_H_

#include <cstdint>
#include <set>
#include <vector>

#include "retroeda/encoding.h"

namespace retroeda {

struct ArchivedRoute {
  Route route;
  FitnessRecord fit;
};

// Feasible routes in discovery order, deduplicated by their rank vector.
class RouteArchive {
 public:
  // Keeps the route if it is feasible and new. Returns true when kept.
  bool Offer(const Route& route, const FitnessRecord& fit);

  bool Contains(const std::vector<int>& ranks) const {
    return seen_.contains(ranks);
  }
  std::size_t size() const { return routes_.size(); }
  const std::vector<ArchivedRoute>& routes() const { return routes_; }
  std::vector<ArchivedRoute> Release() && { return std::move(routes_); }

 private:
  std::vector<ArchivedRoute> routes_;
  std::set<std::vector<int>> seen_;
};

// Population genes at one iteration; rows are individuals.
struct PopulationSnapshot {
  int iteration = 0;
  std::vector<std::vector<double>> population;
  std::vector<std::vector<double>> offspring;
};

struct SearchReport {
  std::vector<ArchivedRoute> archive;
  std::uint64_t expander_calls = 0;
  int iterations_run = 0;
  // Best f seen in the population (EA) or in any rollout so far (MCTS).
  // EA entry 0 is the initial population.
  std::vector<double> best_f_series;
  std::vector<PopulationSnapshot> snapshots;

  bool HasRoute(const std::vector<int>& ranks) const;
  double BestArchivedF() const;
};

}  // namespace retroeda

#endif  // RETROEDA_REPORT_H_
