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

#include "retroeda/parallel.h"

#include <exception>
#include <thread>

#include "retroeda/errors.h"

namespace retroeda {

std::size_t AssignWorker(std::size_t j, std::size_t m) {
  if (m == 0) throw ZeroWorkers();
  return j % m;
}

Individual Evaluate(const Genome& genome, const EvalContext& ctx) {
  Individual ind{genome, Decode(genome, ctx.target, ctx.expander, ctx.blocks,
                                ctx.k), {}};
  ind.fit = Fitness(ind.route, ctx.blocks);
  return ind;
}

std::vector<Individual> ParallelEvaluate(std::span<const Genome> genomes,
                                         const EvalContext& ctx,
                                         std::size_t workers) {
  if (workers == 0) throw ZeroWorkers();
  std::vector<Individual> out(genomes.size());
  if (workers == 1 || genomes.size() <= 1) {
    for (std::size_t j = 0; j < genomes.size(); ++j) {
      out[j] = Evaluate(genomes[j], ctx);
    }
    return out;
  }

  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t s = 0; s < workers; ++s) {
      pool.emplace_back([&, s] {
        try {
          for (std::size_t j = s; j < genomes.size(); j += workers) {
            out[j] = Evaluate(genomes[j], ctx);
          }
        } catch (...) {
          errors[s] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace retroeda
