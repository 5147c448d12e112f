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

#include "retroeda/world.h"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string_view>
#include <unordered_set>

#include "retroeda/errors.h"
#include "retroeda/random.h"

namespace retroeda {
namespace {

constexpr std::array<std::string_view, 16> kTokens = {
    "C", "C", "C", "c", "N", "O", "n", "o",
    "S", "F", "Cl", "Br", "(C)", "=O", "1", "#N"};

// Characters absent from kTokens. Near-miss decoys append them to a prefix
// of a real intermediate; fully fresh decoys are built from them alone.
constexpr std::array<std::string_view, 16> kDecoyTokens = {
    "[Pt]", "[Pd]", "[Mg]", "[Li]", "[K]", "[Hg]", "P", "I",
    "2", "3", "4", "@", "/", "[Ge]", "[Te]", "[Au]"};

// Probability that a decoy molecule gets its own expansion entry.
constexpr double kDecoyExpandable = 0.5;
constexpr int kMaxOffchain = 2;
// Near-miss decoys on the planted chain.
constexpr int kMaxNearTokens = 6;
constexpr int kNearAttempts = 48;
constexpr double kLevelDecay = 0.6;
// Similarity ratio between a decoy and the decoys it expands into.
constexpr double kDecoyFalloff = 0.8;

class Generator {
 public:
  explicit Generator(const WorldSpec& spec)
      : spec_(spec), rng_(SplitMix64(spec.seed)) {}

  World Run();

 private:
  template <std::size_t N>
  std::string RandomTokens(int count,
                           const std::array<std::string_view, N>& alphabet) {
    std::string s;
    for (int i = 0; i < count; ++i) {
      s += alphabet[UniformIndex(rng_, alphabet.size())];
    }
    return s;
  }

  int UniformInt(int lo, int hi) {
    return lo + static_cast<int>(
                    UniformIndex(rng_, static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // A molecule not generated before, built from random tokens.
  template <std::size_t N>
  Molecule Fresh(const std::array<std::string_view, N>& alphabet,
                 int min_tokens, int max_tokens) {
    while (true) {
      std::string text =
          RandomTokens(UniformInt(min_tokens, max_tokens), alphabet);
      // A leading '#' would read back as a comment line.
      if (text.front() == '#') continue;
      if (used_.insert(text).second) return Molecule::Canonicalize(text);
    }
  }

  const Molecule& RandomBlock() {
    return block_list_[UniformIndex(rng_, block_list_.size())];
  }

  // k distinct betas in [beta_min, beta_max), sorted descending.
  std::vector<double> DrawBetas(int count) {
    std::set<double> drawn;
    while (static_cast<int>(drawn.size()) < count) {
      drawn.insert(spec_.beta_min +
                   (spec_.beta_max - spec_.beta_min) * UniformOpen(rng_));
    }
    return {drawn.rbegin(), drawn.rend()};
  }

  // P(rank r) proportional to rank_decay^(r-1).
  int PlantedRank() {
    double total = 0.0;
    for (int r = 0; r < spec_.k; ++r) total += std::pow(spec_.rank_decay, r);
    double u = UniformOpen(rng_) * total;
    for (int r = 1; r < spec_.k; ++r) {
      u -= std::pow(spec_.rank_decay, r - 1);
      if (u < 0.0) return r;
    }
    return spec_.k;
  }

  std::vector<Molecule> WithOffchain(Molecule lead) {
    std::vector<Molecule> reactants{std::move(lead)};
    const int extra = UniformInt(0, kMaxOffchain);
    for (int i = 0; i < extra; ++i) reactants.push_back(RandomBlock());
    return reactants;
  }

  std::vector<Molecule> Decoy(const std::string& near, double want, double cap,
                              int levels_left);
  void AddEntry(const Molecule& product, std::vector<std::vector<Molecule>> lists);

  const WorldSpec& spec_;
  Rng rng_;
  std::unordered_set<std::string> used_;
  std::vector<Molecule> block_list_;
  std::optional<BuildingBlockSet> block_set_;
  ReactionTable::Entries entries_;
};

void Generator::AddEntry(const Molecule& product,
                         std::vector<std::vector<Molecule>> lists) {
  const auto betas = DrawBetas(static_cast<int>(lists.size()));
  auto& slot = entries_[product];
  for (std::size_t i = 0; i < lists.size(); ++i) {
    slot.push_back(Candidate{std::move(lists[i]), betas[i]});
  }
}

// A wrong variant of `near`: a prefix of its text plus decoy tokens. Among a
// few variants, keeps the one whose similarity to the blocks is closest to
// `want` while staying below `cap`. Expandable decoys get less similar
// variants of themselves as candidates.
std::vector<Molecule> Generator::Decoy(const std::string& near, double want,
                                       double cap, int levels_left) {
  const BuildingBlockSet& blocks = *block_set_;
  std::optional<Molecule> lead;
  std::string lead_text;
  double lead_sim = 0.0;
  double best_gap = 0.0;
  for (int attempt = 0; attempt < kNearAttempts; ++attempt) {
    const auto keep = UniformIndex(rng_, near.size() + 1);
    std::string text =
        near.substr(0, keep) + RandomTokens(UniformInt(1, kMaxNearTokens), kDecoyTokens);
    if (used_.contains(text)) continue;
    Molecule m = Molecule::Canonicalize(text);
    const double sim = blocks.SimilarityScore(m);
    if (sim >= cap) continue;
    const double gap = std::abs(sim - want);
    if (!lead || gap < best_gap) {
      best_gap = gap;
      lead_sim = sim;
      lead = std::move(m);
      lead_text = std::move(text);
    }
  }
  if (lead) {
    used_.insert(lead_text);
  } else {
    lead = Fresh(kDecoyTokens, 5, 10);
    lead_text = lead->text();
    lead_sim = blocks.SimilarityScore(*lead);
  }
  std::vector<Molecule> reactants = WithOffchain(*lead);
  if (levels_left > 0 && UniformOpen(rng_) < kDecoyExpandable) {
    const int count = UniformInt(1, spec_.k);
    std::vector<std::vector<Molecule>> lists;
    for (int i = 0; i < count; ++i) {
      lists.push_back(Decoy(lead_text, kDecoyFalloff * lead_sim,
                            std::min(cap, lead_sim), levels_left - 1));
    }
    AddEntry(*lead, std::move(lists));
  }
  return reactants;
}

World Generator::Run() {
  std::vector<Molecule> blocks;
  for (int i = 0; i < spec_.block_count; ++i) blocks.push_back(Fresh(kTokens, 2, 6));
  block_list_ = blocks;
  block_set_.emplace(blocks);

  // Planted intermediates: one block plus a shrinking suffix, so each step
  // moves the frontier closer to the building-block set.
  const Molecule base = RandomBlock();
  std::vector<Molecule> chain;
  while (chain.empty()) {
    std::vector<std::string> suffix;
    for (int i = 0; i < 2 * spec_.depth; ++i) suffix.push_back(RandomTokens(1, kTokens));
    std::vector<std::string> texts;
    for (int i = 0; i < spec_.depth; ++i) {
      std::string text = base.text();
      for (int t = 0; t < 2 * (spec_.depth - i); ++t) text += suffix[t];
      texts.push_back(std::move(text));
    }
    if (std::any_of(texts.begin(), texts.end(),
                    [&](const std::string& t) { return used_.contains(t); }) ||
        std::set<std::string>(texts.begin(), texts.end()).size() !=
            texts.size()) {
      continue;
    }
    for (auto& t : texts) {
      used_.insert(t);
      chain.push_back(Molecule::Canonicalize(t));
    }
  }

  std::vector<int> planted(spec_.depth);
  for (auto& r : planted) r = PlantedRank();

  // Alternative routes take the ranks just below the planted one (lower
  // beta), so the planted route stays the unique optimum.
  std::set<std::pair<int, int>> alt_slots;
  std::vector<int> next_alt(planted);
  for (int i = 0; i < spec_.alt_routes; ++i) {
    std::vector<int> open_steps;
    for (int step = 0; step < spec_.depth; ++step) {
      if (next_alt[step] < spec_.k) open_steps.push_back(step);
    }
    if (open_steps.empty()) break;
    const int step = open_steps[UniformIndex(rng_, open_steps.size())];
    alt_slots.emplace(step, ++next_alt[step]);
  }

  std::vector<std::vector<double>> step_betas;
  std::vector<double> planted_betas;
  for (int step = 0; step < spec_.depth; ++step) {
    step_betas.push_back(DrawBetas(spec_.k));
    planted_betas.push_back(step_betas.back()[planted[step] - 1]);
  }
  // tail[i]: beta product of the planted route from step i on.
  std::vector<double> tail(spec_.depth + 1, 1.0);
  for (int step = spec_.depth - 1; step >= 0; --step) {
    tail[step] = tail[step + 1] * planted_betas[step];
  }

  const Molecule planted_block = RandomBlock();
  for (int step = 0; step < spec_.depth; ++step) {
    const bool last = step + 1 == spec_.depth;
    const auto& betas = step_betas[step];
    const Molecule& next = last ? planted_block : chain[step + 1];
    std::vector<Candidate> slot;
    for (int rank = 1; rank <= spec_.k; ++rank) {
      std::vector<Molecule> reactants;
      if (rank == planted[step] || alt_slots.contains({step, rank})) {
        reactants = WithOffchain(next);
      } else {
        // Fitness of leaving the chain here, relative to the planted route,
        // lies in [decay^(n+1), decay^n] where n counts the remaining steps,
        // so bands of successive steps do not overlap. Within a band,
        // higher-ranked decoys are closer misses.
        const double top = std::pow(kLevelDecay, spec_.depth - step);
        const double closeness = 1.0 - static_cast<double>(rank - 1) / spec_.k;
        const double want = top * (kLevelDecay + (1.0 - kLevelDecay) * closeness);
        const double scale = tail[step] / betas[rank - 1];
        reactants = Decoy(next.text(), want * scale, top * scale, spec_.decoy_depth);
      }
      slot.push_back(Candidate{std::move(reactants), betas[rank - 1]});
    }
    entries_[chain[step]] = std::move(slot);
  }

  World world{ReactionTable(std::move(entries_)), BuildingBlockSet(blocks),
              chain.front(), spec_.depth, planted, planted_betas};
  return world;
}

std::string JoinPath(const std::string& dir, const char* file) {
  return (std::filesystem::path(dir) / file).string();
}

}  // namespace

void WorldSpec::Validate() const {
  if (k < 2 || k > 64) throw DegenerateConfig("world k must be in [2, 64]");
  if (depth < 1 || depth > 16) {
    throw DegenerateConfig("world depth must be in [1, 16]");
  }
  if (block_count < 1) throw DegenerateConfig("block_count must be >= 1");
  if (decoy_depth < 0) throw DegenerateConfig("decoy_depth must be >= 0");
  if (!(beta_min > 0.0 && beta_min < beta_max && beta_max <= 1.0)) {
    throw DegenerateConfig("beta range must satisfy 0 < min < max <= 1");
  }
  if (alt_routes < 0) throw DegenerateConfig("alt_routes must be >= 0");
  if (!(rank_decay > 0.0 && rank_decay <= 1.0)) {
    throw DegenerateConfig("rank_decay must be in (0, 1]");
  }
}

World GenerateWorld(const WorldSpec& spec) {
  spec.Validate();
  return Generator(spec).Run();
}

void WriteWorld(const std::string& dir, const World& world) {
  std::filesystem::create_directories(dir);
  {
    std::ofstream out(JoinPath(dir, kTableFile), std::ios::binary);
    WriteReactionTable(out, world.table);
  }
  {
    std::ofstream out(JoinPath(dir, kBlocksFile), std::ios::binary);
    WriteBuildingBlocks(out, world.blocks);
  }
  std::ofstream out(JoinPath(dir, kManifestFile), std::ios::binary);
  out << world.target.text() << '\t' << world.depth << '\t';
  for (std::size_t i = 0; i < world.planted_genes.size(); ++i) {
    if (i > 0) out << ',';
    out << world.planted_genes[i];
  }
  out << '\n';
  if (!out) throw Error("failed to write world to " + dir);
}

World LoadWorld(const std::string& dir) {
  ReactionTable table = LoadReactionTable(JoinPath(dir, kTableFile));
  BuildingBlockSet blocks = LoadBuildingBlocks(JoinPath(dir, kBlocksFile));

  const std::string manifest_path = JoinPath(dir, kManifestFile);
  std::ifstream in(manifest_path);
  if (!in) throw ParseError(manifest_path, 0, "cannot open manifest");
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") != std::string::npos && line[0] != '#') {
      break;
    }
  }
  std::vector<std::string> fields;
  std::stringstream ss(line);
  for (std::string f; std::getline(ss, f, '\t');) fields.push_back(f);
  if (fields.empty() || fields.size() > 3) {
    throw ParseError(manifest_path, line_no,
                     "expected target<TAB>depth<TAB>planted_genes");
  }
  try {
    Molecule target = Molecule::Canonicalize(fields[0]);
    int depth = 0;
    std::vector<int> genes;
    if (fields.size() > 1 && !fields[1].empty()) {
      const auto& t = fields[1];
      const auto res = std::from_chars(t.data(), t.data() + t.size(), depth);
      if (res.ec != std::errc() || res.ptr != t.data() + t.size() || depth < 0) {
        throw ParseError(manifest_path, line_no, "bad depth");
      }
    }
    if (fields.size() > 2 && !fields[2].empty()) {
      std::stringstream gs(fields[2]);
      for (std::string g; std::getline(gs, g, ',');) {
        int rank = 0;
        const auto res = std::from_chars(g.data(), g.data() + g.size(), rank);
        if (res.ec != std::errc() || res.ptr != g.data() + g.size() || rank < 1) {
          throw ParseError(manifest_path, line_no, "bad planted gene '" + g + "'");
        }
        genes.push_back(rank);
      }
    }
    return World{std::move(table), std::move(blocks), std::move(target), depth,
                 std::move(genes), {}};
  } catch (const EmptyMolecule& e) {
    throw ParseError(manifest_path, line_no, e.what());
  }
}

}  // namespace retroeda
