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

#ifndef RETROEDA_CHEM_H_
#define RETROEDA_CHEM_H_

#include <bitset>
#include <compare>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

namespace retroeda {

// A compound identified by its canonical token string. The string is treated
// opaquely: canonical form is the trimmed input, and identity is exact string
// equality on that form.
class Molecule {
 public:
  // Throws EmptyMolecule when `raw` is empty or whitespace only, or when the
  // trimmed text contains a line break.
  static Molecule Canonicalize(std::string_view raw);

  const std::string& text() const { return text_; }
  std::size_t size() const { return text_.size(); }

  friend bool operator==(const Molecule&, const Molecule&) = default;
  friend std::strong_ordering operator<=>(const Molecule&,
                                          const Molecule&) = default;

 private:
  explicit Molecule(std::string text) : text_(std::move(text)) {}

  std::string text_;
};

std::ostream& operator<<(std::ostream& os, const Molecule& m);

inline constexpr std::size_t kFingerprintBits = 1024;
using Fingerprint = std::bitset<kFingerprintBits>;

// Hashed character 1-, 2- and 3-grams folded into kFingerprintBits bits.
// The hash is fixed (seeded FNV-1a with a SplitMix64 finalizer), so results
// do not depend on platform or process.
Fingerprint ComputeFingerprint(const Molecule& m);

// |a AND b| / |a OR b|; 0 when both are empty.
double Tanimoto(const Fingerprint& a, const Fingerprint& b);

// The terminal set of purchasable molecules. Members keep first-insertion
// order; duplicates are dropped.
class BuildingBlockSet {
 public:
  BuildingBlockSet() = default;
  explicit BuildingBlockSet(std::vector<Molecule> members);

  bool Contains(const Molecule& m) const;
  bool empty() const { return members_.empty(); }
  std::size_t size() const { return members_.size(); }
  const std::vector<Molecule>& members() const { return members_; }
  const std::vector<Fingerprint>& fingerprints() const { return fingerprints_; }

  // 1.0 for members; otherwise the best Tanimoto against any member.
  // Throws EmptyBuildingBlockSet on an empty set.
  double SimilarityScore(const Molecule& m) const;

 private:
  struct TextHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const {
      return std::hash<std::string_view>{}(s);
    }
  };

  std::vector<Molecule> members_;
  std::vector<Fingerprint> fingerprints_;
  std::unordered_set<std::string, TextHash, std::equal_to<>> index_;
};

inline double SimilarityScore(const Molecule& m, const BuildingBlockSet& blocks) {
  return blocks.SimilarityScore(m);
}

// One molecule per line; blank lines and lines starting with '#' are skipped.
BuildingBlockSet ParseBuildingBlocks(std::istream& in,
                                     const std::string& source = "<stream>");
BuildingBlockSet LoadBuildingBlocks(const std::string& path);
void WriteBuildingBlocks(std::ostream& out, const BuildingBlockSet& blocks);

}  // namespace retroeda

template <>
struct std::hash<retroeda::Molecule> {
  std::size_t operator()(const retroeda::Molecule& m) const noexcept {
    return std::hash<std::string>{}(m.text());
  }
};

#endif  // RETROEDA_CHEM_H_
