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

#ifndef RETROEDA_EXPANDER_H_
#define RETROEDA_EXPANDER_H_

#include <atomic>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "retroeda/chem.h"

namespace retroeda {

// One ranked output of a single-step expansion.
struct Candidate {
  std::vector<Molecule> reactants;  // non-empty
  double beta = 1.0;                // in (0, 1]

  friend bool operator==(const Candidate&, const Candidate&) = default;
};

// Ranked candidates for one product, best first. Views memory owned by the
// expander that produced it and stays valid for that expander's lifetime.
using ExpansionResult = std::span<const Candidate>;

// The single-step model: product -> top-k candidate reactant sets.
// Implementations must be deterministic and safe for concurrent callers.
// An unknown product yields an empty result.
class Expander {
 public:
  virtual ~Expander() = default;
  virtual ExpansionResult Expand(const Molecule& product, int k) const = 0;
};

// Table-driven expander. Candidates of each product are kept sorted by beta
// descending, ties broken by lexicographic order of the reactant list.
class ReactionTable final : public Expander {
 public:
  using Entries = std::map<Molecule, std::vector<Candidate>>;

  ReactionTable() = default;
  // Sorts every candidate list. Throws Error on an empty reactant list or a
  // beta outside (0, 1].
  explicit ReactionTable(Entries entries);

  ExpansionResult Expand(const Molecule& product, int k) const override;

  bool Contains(const Molecule& product) const {
    return entries_.contains(product);
  }
  std::size_t size() const { return entries_.size(); }
  const Entries& entries() const { return entries_; }

 private:
  Entries entries_;
};

// Orders candidates by beta descending, then reactant list ascending.
void SortCandidates(std::vector<Candidate>& candidates);

// Format: product<TAB>rank<TAB>beta<TAB>reactant1[.reactant2...] per line.
// Blank lines and '#' comments are skipped. The rank column must be a
// positive integer unique per product; the order is re-derived from beta.
ReactionTable ParseReactionTable(std::istream& in,
                                 const std::string& source = "<stream>");
ReactionTable LoadReactionTable(const std::string& path);
void WriteReactionTable(std::ostream& out, const ReactionTable& table);

// Memoizing front for another expander, fixed to one beam width k. Each
// distinct molecule reaches the inner expander once; `calls()` counts those
// misses. Safe for concurrent use.
class ExpansionCache final : public Expander {
 public:
  ExpansionCache(const Expander& inner, int k);

  // `k` must not exceed the cache's beam width.
  ExpansionResult Expand(const Molecule& product, int k) const override;

  std::uint64_t calls() const { return calls_.load(std::memory_order_relaxed); }
  int beam() const { return k_; }

 private:
  const Expander& inner_;
  int k_;
  mutable std::shared_mutex mutex_;
  mutable std::unordered_map<Molecule, ExpansionResult> memo_;
  mutable std::atomic<std::uint64_t> calls_{0};
};

// Shortest round-trip decimal form of a double.
std::string FormatDouble(double value);

}  // namespace retroeda

#endif  // RETROEDA_EXPANDER_H_
