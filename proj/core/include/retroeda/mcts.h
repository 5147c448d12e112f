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

#ifndef RETROEDA_MCTS_H_
#define RETROEDA_MCTS_H_

#include <cmath>
#include <cstdint>

#include "retroeda/chem.h"
#include "retroeda/expander.h"
#include "retroeda/report.h"

namespace retroeda {

struct MctsConfig {
  double exploration = std::sqrt(2.0);
  int budget = 1000;  // iterations
  int max_depth = 4;
  int k = 10;
  std::uint64_t seed = 1;  // breaks exact UCT ties
  int stop_after_solutions = 0;  // 0 disables

  // Throws DegenerateConfig.
  void Validate() const;
};

// UCT baseline over the same expander and objective as EaSearch. Each
// iteration selects by mean + c * sqrt(ln N_parent / N_child), visiting
// unexpanded children left to right first, adds one child, rolls out along
// rank-1 candidates to max_depth, and backs up the route's f. Expansions go
// through a per-run ExpansionCache.
SearchReport MctsSearch(const Molecule& target, const MctsConfig& config,
                        const Expander& expander, const BuildingBlockSet& blocks);

}  // namespace retroeda

#endif  // RETROEDA_MCTS_H_
