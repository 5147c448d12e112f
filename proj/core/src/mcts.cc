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

#include "retroeda/mcts.h"

#include <algorithm>
#include <limits>
#include <vector>

#include "retroeda/encoding.h"
#include "retroeda/errors.h"
#include "retroeda/random.h"

namespace retroeda {
namespace {

struct Node {
  int parent = -1;
  std::vector<int> path;      // ranks from the root
  std::vector<int> children;  // node index per rank, -1 until created
  bool terminal = false;
  double terminal_reward = 0.0;
  std::uint64_t visits = 0;
  double value_sum = 0.0;
};

class Tree {
 public:
  Tree(const Molecule& target, const MctsConfig& config,
       const ExpansionCache& cache, const BuildingBlockSet& blocks,
       RouteArchive& archive)
      : target_(target),
        config_(config),
        cache_(cache),
        blocks_(blocks),
        archive_(archive),
        rng_(config.seed) {}

  // One select/expand/rollout/backup pass. Returns the reward backed up.
  double Iterate();

 private:
  int Create(int parent, std::vector<int> path);
  int PickChild(const Node& node);
  void Backup(int index, double reward);

  const Molecule& target_;
  const MctsConfig& config_;
  const ExpansionCache& cache_;
  const BuildingBlockSet& blocks_;
  RouteArchive& archive_;
  Rng rng_;
  std::vector<Node> nodes_;
  double last_reward_ = 0.0;
};

int Tree::Create(int parent, std::vector<int> path) {
  std::vector<int> rollout = path;
  rollout.resize(static_cast<std::size_t>(config_.max_depth), 1);
  const Route route = DecodeRanks(rollout, target_, cache_, blocks_, config_.k);
  const FitnessRecord fit = Fitness(route, blocks_);
  archive_.Offer(route, fit);
  last_reward_ = fit.f;

  Node node;
  node.parent = parent;
  const Route prefix = DecodeRanks(path, target_, cache_, blocks_, config_.k);
  if (prefix.status != RouteStatus::kDepthExhausted ||
      static_cast<int>(path.size()) >= config_.max_depth) {
    node.terminal = true;
  } else {
    const auto options = cache_.Expand(*prefix.frontier, config_.k);
    node.children.assign(options.size(), -1);
    node.terminal = options.empty();
  }
  node.terminal_reward = fit.f;
  node.path = std::move(path);
  nodes_.push_back(std::move(node));
  return static_cast<int>(nodes_.size()) - 1;
}

int Tree::PickChild(const Node& node) {
  const double log_parent = std::log(static_cast<double>(node.visits));
  double best = -std::numeric_limits<double>::infinity();
  std::vector<int> ties;
  for (int child : node.children) {
    const Node& c = nodes_[child];
    const double visits = static_cast<double>(c.visits);
    const double score = c.value_sum / visits +
                         config_.exploration * std::sqrt(log_parent / visits);
    if (score > best) {
      best = score;
      ties.assign(1, child);
    } else if (score == best) {
      ties.push_back(child);
    }
  }
  if (ties.size() == 1) return ties.front();
  return ties[UniformIndex(rng_, ties.size())];
}

void Tree::Backup(int index, double reward) {
  for (int i = index; i >= 0; i = nodes_[i].parent) {
    nodes_[i].visits += 1;
    nodes_[i].value_sum += reward;
  }
}

double Tree::Iterate() {
  if (nodes_.empty()) {
    const int root = Create(-1, {});
    Backup(root, last_reward_);
    return last_reward_;
  }
  int current = 0;
  while (true) {
    Node& node = nodes_[current];
    if (node.terminal) {
      Backup(current, node.terminal_reward);
      return node.terminal_reward;
    }
    const auto unvisited =
        std::find(node.children.begin(), node.children.end(), -1);
    if (unvisited != node.children.end()) {
      const int rank = static_cast<int>(unvisited - node.children.begin()) + 1;
      std::vector<int> path = node.path;
      path.push_back(rank);
      const int child = Create(current, std::move(path));
      // Create() may reallocate nodes_; re-index.
      nodes_[current].children[rank - 1] = child;
      Backup(child, last_reward_);
      return last_reward_;
    }
    current = PickChild(node);
  }
}

}  // namespace

void MctsConfig::Validate() const {
  if (!(exploration > 0.0)) throw DegenerateConfig("exploration must be > 0");
  if (budget < 0) throw DegenerateConfig("budget must be >= 0");
  if (max_depth < 1) throw DegenerateConfig("max_depth must be >= 1");
  if (k < 1) throw DegenerateConfig("beam k must be >= 1");
  if (stop_after_solutions < 0) {
    throw DegenerateConfig("stop_after_solutions must be >= 0");
  }
}

SearchReport MctsSearch(const Molecule& target, const MctsConfig& config,
                        const Expander& expander, const BuildingBlockSet& blocks) {
  config.Validate();
  if (blocks.empty()) throw EmptyBuildingBlockSet();

  ExpansionCache cache(expander, config.k);
  RouteArchive archive;
  Tree tree(target, config, cache, blocks, archive);
  SearchReport report;
  double best = 0.0;
  for (int iter = 1; iter <= config.budget; ++iter) {
    best = std::max(best, tree.Iterate());
    report.best_f_series.push_back(best);
    report.iterations_run = iter;
    if (config.stop_after_solutions > 0 &&
        archive.size() >= static_cast<std::size_t>(config.stop_after_solutions)) {
      break;
    }
  }
  report.expander_calls = cache.calls();
  report.archive = std::move(archive).Release();
  return report;
}

}  // namespace retroeda
