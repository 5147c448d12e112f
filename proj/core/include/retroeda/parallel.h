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

#ifndef RETROEDA_PARALLEL_H_
#define RETROEDA_PARALLEL_H_

#include <cstddef>
#include <span>
#include <vector>

#include "retroeda/chem.h"
#include "retroeda/encoding.h"
#include "retroeda/expander.h"

namespace retroeda {

// Worker that evaluates individual j among m workers: j mod m.
// Throws ZeroWorkers for m == 0.
std::size_t AssignWorker(std::size_t j, std::size_t m);

struct EvalContext {
  const Molecule& target;
  const Expander& expander;
  const BuildingBlockSet& blocks;
  int k;
};

Individual Evaluate(const Genome& genome, const EvalContext& ctx);

// Decodes and scores every genome. Genome j runs on worker AssignWorker(j, m);
// the output keeps input order and equals sequential evaluation. m == 1 runs
// on the calling thread.
std::vector<Individual> ParallelEvaluate(std::span<const Genome> genomes,
                                         const EvalContext& ctx,
                                         std::size_t workers);

}  // namespace retroeda

#endif  // RETROEDA_PARALLEL_H_
