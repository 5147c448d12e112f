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

#ifndef RETROEDA_WORLD_H_
#define RETROEDA_WORLD_H_

#include <cstdint>
#include <string>
#include <vector>

#include "retroeda/chem.h"
#include "retroeda/expander.h"

namespace retroeda {

// Parameters of a synthetic world with one planted feasible route.
struct WorldSpec {
  std::uint64_t seed = 1;
  int k = 10;               // candidates per expanded molecule, [2, 64]
  int depth = 4;            // planted route length, [1, 16]
  int block_count = 64;     // |building blocks|, >= 1
  int decoy_depth = 2;      // extra expansion levels below a decoy, >= 0
  double beta_min = 0.8;    // betas ~ U[beta_min, beta_max), 0 < min < max <= 1
  double beta_max = 0.95;
  // Slots below the planted rank that reconnect to the next planted
  // intermediate. Capped by the number of such slots.
  int alt_routes = 2;
  // Planted ranks follow P(r) ~ rank_decay^(r-1); 1 gives uniform ranks.
  double rank_decay = 0.3;

  // Throws DegenerateConfig when a field is out of range.
  void Validate() const;
};

// A search instance: expander table, building blocks and target. Generated
// worlds also carry the planted route.
struct World {
  ReactionTable table;
  BuildingBlockSet blocks;
  Molecule target;
  int depth = 0;                     // planted route length; 0 if unknown
  std::vector<int> planted_genes;    // 1-based ranks, one per planted step
  std::vector<double> planted_betas; // empty for worlds loaded from disk
};

World GenerateWorld(const WorldSpec& spec);

// Directory layout: table.tsv, blocks.txt, manifest.tsv. The manifest is one
// line: target<TAB>depth<TAB>planted_genes as comma-separated ranks.
void WriteWorld(const std::string& dir, const World& world);
World LoadWorld(const std::string& dir);

inline constexpr const char* kTableFile = "table.tsv";
inline constexpr const char* kBlocksFile = "blocks.txt";
inline constexpr const char* kManifestFile = "manifest.tsv";

}  // namespace retroeda

#endif  // RETROEDA_WORLD_H_
