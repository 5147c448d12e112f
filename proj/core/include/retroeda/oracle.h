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

#ifndef RETROEDA_ORACLE_H_
#define RETROEDA_ORACLE_H_

#include <cstdint>
#include <vector>

#include "retroeda/chem.h"
#include "retroeda/expander.h"
#include "retroeda/report.h"

namespace retroeda {

inline constexpr std::uint64_t kDefaultBruteForceCap = 1'000'000;

struct BruteForceResult {
  double max_f = 0.0;
  std::vector<int> best_ranks;          // first rank vector reaching max_f
  std::vector<ArchivedRoute> feasible;  // deduplicated, enumeration order
  std::uint64_t evaluated = 0;
};

// Exhaustive sweep over {1..k}^max_depth. Each point is decoded from the
// midpoint genes (x - 0.5) / k. Throws SpaceTooLarge when k^max_depth > cap.
BruteForceResult BruteForce(const Molecule& target, const Expander& expander,
                            const BuildingBlockSet& blocks, int k, int max_depth,
                            std::uint64_t cap = kDefaultBruteForceCap);

}  // namespace retroeda

#endif  // RETROEDA_ORACLE_H_
