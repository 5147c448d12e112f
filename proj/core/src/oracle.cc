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

#include "retroeda/oracle.h"

#include <string>

#include "retroeda/encoding.h"
#include "retroeda/errors.h"

namespace retroeda {

BruteForceResult BruteForce(const Molecule& target, const Expander& expander,
                            const BuildingBlockSet& blocks, int k, int max_depth,
                            std::uint64_t cap) {
  if (k < 1 || max_depth < 1) throw DegenerateConfig("k and depth must be >= 1");
  std::uint64_t space = 1;
  for (int i = 0; i < max_depth; ++i) {
    if (space > cap / static_cast<std::uint64_t>(k)) {
      throw SpaceTooLarge("search space " + std::to_string(k) + "^" +
                          std::to_string(max_depth) + " exceeds cap " +
                          std::to_string(cap));
    }
    space *= static_cast<std::uint64_t>(k);
  }

  ExpansionCache cache(expander, k);
  BruteForceResult result;
  RouteArchive archive;
  std::vector<int> digits(static_cast<std::size_t>(max_depth), 1);
  bool first = true;
  for (std::uint64_t n = 0; n < space; ++n) {
    std::vector<double> genes;
    genes.reserve(digits.size());
    for (int d : digits) genes.push_back(MidpointGene(d, k));
    const Route route = Decode(Genome(std::move(genes)), target, cache, blocks, k);
    const FitnessRecord fit = Fitness(route, blocks);
    archive.Offer(route, fit);
    if (first || fit.f > result.max_f) {
      result.max_f = fit.f;
      result.best_ranks = digits;
      first = false;
    }
    ++result.evaluated;
    // Odometer increment, last position fastest.
    for (std::size_t pos = digits.size(); pos-- > 0;) {
      if (++digits[pos] <= k) break;
      digits[pos] = 1;
    }
  }
  result.feasible = std::move(archive).Release();
  return result;
}

}  // namespace retroeda
