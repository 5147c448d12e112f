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

#include "retroeda/eda.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "retroeda/errors.h"
#include "retroeda/parallel.h"

namespace retroeda {
namespace {

constexpr std::uint64_t kSelectionStream = ~0ULL;

void UniformDimension(int bins, std::vector<double>& bounds,
                      std::vector<double>& probs) {
  bounds.resize(bins + 1);
  for (int m = 0; m <= bins; ++m) {
    bounds[m] = static_cast<double>(m) / bins;
  }
  bounds[bins] = 1.0;
  probs.assign(bins, 1.0 / bins);
}

int PickBin(std::span<const double> probs, double u) {
  double cum = 0.0;
  int last_positive = 0;
  for (std::size_t m = 0; m < probs.size(); ++m) {
    if (probs[m] <= 0.0) continue;
    cum += probs[m];
    last_positive = static_cast<int>(m);
    if (u < cum) return last_positive;
  }
  return last_positive;
}

}  // namespace

int CountingBin(std::span<const double> boundaries, double value) {
  const int bins = static_cast<int>(boundaries.size()) - 1;
  // Interior boundaries a1..a_{M-1}; count those <= value.
  const auto first = boundaries.begin() + 1;
  const auto last = boundaries.begin() + bins;
  const int at_or_below = static_cast<int>(std::upper_bound(first, last, value) - first);
  // at_or_below == 1 -> bin 2 (index 1); the last middle bin is closed.
  return std::clamp(at_or_below, 1, bins - 2);
}

HistogramModel BuildModel(std::span<const Genome> population, int bins) {
  if (bins < 3) throw DegenerateConfig("histogram needs at least 3 bins");
  if (population.size() < 2) {
    throw DegenerateConfig("histogram needs at least 2 individuals");
  }
  const std::size_t dims = population.front().size();
  for (const auto& g : population) {
    if (g.size() != dims) throw DegenerateConfig("genome lengths differ");
  }

  HistogramModel model;
  model.bins = bins;
  model.boundaries.resize(dims);
  model.probabilities.resize(dims);

  std::vector<double> values(population.size());
  for (std::size_t i = 0; i < dims; ++i) {
    for (std::size_t j = 0; j < population.size(); ++j) {
      values[j] = population[j][i];
    }
    std::sort(values.begin(), values.end());
    const double min1 = values[0];
    const double min2 = values[1];
    const double max1 = values[values.size() - 1];
    const double max2 = values[values.size() - 2];
    const double lower = std::max(min1 - 0.5 * (min2 - min1), 0.0);
    const double upper = std::min(max1 + 0.5 * (max1 - max2), 1.0);

    auto& bounds = model.boundaries[i];
    auto& probs = model.probabilities[i];
    if (lower >= upper) {
      UniformDimension(bins, bounds, probs);
      continue;
    }

    bounds.assign(bins + 1, 0.0);
    const double width = (upper - lower) / (bins - 2);
    for (int m = 1; m < bins - 1; ++m) bounds[m] = lower + (m - 1) * width;
    bounds[bins - 1] = upper;
    bounds[bins] = 1.0;

    std::vector<double> counts(bins, 0.0);
    counts[0] = bounds[1] > bounds[0] ? kBoundaryBinMass : 0.0;
    counts[bins - 1] = bounds[bins] > bounds[bins - 1] ? kBoundaryBinMass : 0.0;
    for (double v : values) counts[CountingBin(bounds, v)] += 1.0;

    const double total = std::accumulate(counts.begin(), counts.end(), 0.0);
    probs.resize(bins);
    for (int m = 0; m < bins; ++m) probs[m] = counts[m] / total;
  }
  return model;
}

Genome SampleGenome(const HistogramModel& model, Rng& rng) {
  std::vector<double> genes(model.dimensions());
  for (std::size_t i = 0; i < genes.size(); ++i) {
    const auto& bounds = model.boundaries[i];
    const int m = PickBin(model.probabilities[i], UniformOpen(rng));
    const double lo = bounds[m];
    const double hi = bounds[m + 1];
    const bool last = m == model.bins - 1;
    double value = lo + (hi - lo) * (last ? UniformClosed(rng) : UniformOpen(rng));
    // Rounding must not leave the bin (or the unit interval).
    if (!last && value >= hi) value = std::nextafter(hi, lo);
    genes[i] = std::clamp(value, lo, hi);
  }
  return Genome(std::move(genes));
}

std::vector<Genome> Sample(const HistogramModel& model, std::size_t count,
                           Rng& rng) {
  std::vector<Genome> out;
  out.reserve(count);
  for (std::size_t n = 0; n < count; ++n) out.push_back(SampleGenome(model, rng));
  return out;
}

std::vector<double> RouletteWeights(std::span<const double> f_values) {
  std::vector<double> weights(f_values.size(), 0.0);
  if (f_values.empty()) return weights;
  const double total = std::accumulate(f_values.begin(), f_values.end(), 0.0);
  if (total <= 0.0) {
    std::fill(weights.begin(), weights.end(), 1.0 / f_values.size());
    return weights;
  }
  for (std::size_t i = 0; i < f_values.size(); ++i) {
    weights[i] = std::max(f_values[i], 0.0) / total;
  }
  return weights;
}

std::vector<Individual> Select(std::vector<Individual> pool, std::size_t n,
                               ObjectiveVariant variant, Rng& rng) {
  n = std::min(n, pool.size());
  if (variant != ObjectiveVariant::kRoulette) {
    std::vector<double> keys(pool.size());
    for (std::size_t i = 0; i < pool.size(); ++i) {
      keys[i] = Objective(pool[i].fit.f, variant);
    }
    std::vector<std::size_t> order(pool.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
    std::vector<Individual> kept;
    kept.reserve(n);
    for (std::size_t i = 0; i < n; ++i) kept.push_back(std::move(pool[order[i]]));
    return kept;
  }

  std::vector<Individual> kept;
  kept.reserve(n);
  std::vector<double> f(pool.size());
  for (std::size_t i = 0; i < pool.size(); ++i) f[i] = pool[i].fit.f;
  while (kept.size() < n) {
    const auto weights = RouletteWeights(f);
    const double u = UniformOpen(rng);
    double cum = 0.0;
    std::size_t pick = weights.size() - 1;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      cum += weights[i];
      if (u < cum && weights[i] > 0.0) {
        pick = i;
        break;
      }
    }
    // Rounding can leave u past the final sum; take the last weighted entry.
    if (weights[pick] <= 0.0) {
      for (std::size_t i = weights.size(); i-- > 0;) {
        if (weights[i] > 0.0) {
          pick = i;
          break;
        }
      }
    }
    kept.push_back(std::move(pool[pick]));
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
    f.erase(f.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return kept;
}

void EAConfig::Validate() const {
  if (population_size < 2) throw DegenerateConfig("population_size must be >= 2");
  if (bins < 3) throw DegenerateConfig("bins must be >= 3");
  if (k < 1) throw DegenerateConfig("beam k must be >= 1");
  if (max_depth < 1) throw DegenerateConfig("max_depth must be >= 1");
  if (max_iterations < 0) throw DegenerateConfig("max_iterations must be >= 0");
  if (stop_after_solutions < 0) {
    throw DegenerateConfig("stop_after_solutions must be >= 0");
  }
  if (workers < 1) throw DegenerateConfig("workers must be >= 1");
  if (snapshot_every < 0) throw DegenerateConfig("snapshot_every must be >= 0");
}

namespace {

std::vector<std::vector<double>> GeneMatrix(std::span<const Individual> people) {
  std::vector<std::vector<double>> rows;
  rows.reserve(people.size());
  for (const auto& p : people) {
    rows.emplace_back(p.genome.genes().begin(), p.genome.genes().end());
  }
  return rows;
}

std::vector<std::vector<double>> GeneMatrix(std::span<const Genome> genomes) {
  std::vector<std::vector<double>> rows;
  rows.reserve(genomes.size());
  for (const auto& g : genomes) rows.emplace_back(g.genes().begin(), g.genes().end());
  return rows;
}

double BestF(std::span<const Individual> people) {
  double best = 0.0;
  for (const auto& p : people) best = std::max(best, p.fit.f);
  return best;
}

}  // namespace

SearchReport EaSearch(const Molecule& target, const EAConfig& config,
                      const Expander& expander, const BuildingBlockSet& blocks) {
  config.Validate();
  if (blocks.empty()) throw EmptyBuildingBlockSet();

  ExpansionCache cache(expander, config.k);
  const EvalContext ctx{target, cache, blocks, config.k};
  const auto n = static_cast<std::size_t>(config.population_size);
  const auto dims = static_cast<std::size_t>(config.max_depth);
  const auto workers = static_cast<std::size_t>(config.workers);

  SearchReport report;
  RouteArchive archive;
  const auto absorb = [&](std::span<const Individual> people) {
    for (const auto& p : people) archive.Offer(p.route, p.fit);
  };
  const auto done = [&] {
    return config.stop_after_solutions > 0 &&
           archive.size() >= static_cast<std::size_t>(config.stop_after_solutions);
  };

  std::vector<Genome> initial;
  initial.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    Rng rng(DeriveSeed(config.seed, 0, j));
    std::vector<double> genes(dims);
    for (auto& g : genes) g = UniformOpen(rng);
    initial.emplace_back(std::move(genes));
  }
  std::vector<Individual> population = ParallelEvaluate(initial, ctx, workers);
  absorb(population);
  report.best_f_series.push_back(BestF(population));

  for (int iter = 1; iter <= config.max_iterations && !done(); ++iter) {
    std::vector<Genome> genomes;
    genomes.reserve(n);
    for (const auto& p : population) genomes.push_back(p.genome);
    const HistogramModel model = BuildModel(genomes, config.bins);

    std::vector<Genome> children;
    children.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
      Rng rng(DeriveSeed(config.seed, static_cast<std::uint64_t>(iter), j));
      children.push_back(SampleGenome(model, rng));
    }
    std::vector<Individual> offspring = ParallelEvaluate(children, ctx, workers);
    absorb(offspring);
    report.iterations_run = iter;

    if (config.snapshot_every > 0 && iter % config.snapshot_every == 0) {
      report.snapshots.push_back(
          PopulationSnapshot{iter, GeneMatrix(population), GeneMatrix(children)});
    }

    std::vector<Individual> pool = std::move(population);
    pool.insert(pool.end(), std::make_move_iterator(offspring.begin()),
                std::make_move_iterator(offspring.end()));
    Rng select_rng(DeriveSeed(config.seed, static_cast<std::uint64_t>(iter),
                              kSelectionStream));
    population = Select(std::move(pool), n, config.objective, select_rng);
    report.best_f_series.push_back(BestF(population));
  }

  report.expander_calls = cache.calls();
  report.archive = std::move(archive).Release();
  return report;
}

}  // namespace retroeda
