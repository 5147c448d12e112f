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

#include "retroeda/chem.h"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>

#include "retroeda/errors.h"
#include "retroeda/random.h"

namespace retroeda {
namespace {

constexpr std::uint64_t kFnvOffset = 0xCBF29CE484222325ULL;
constexpr std::uint64_t kFnvPrime = 0x100000001B3ULL;
constexpr std::uint64_t kFingerprintSeed = 0x5EED'F1A9'2024'0A11ULL;

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
         c == '\f';
}

std::uint64_t HashNgram(std::string_view gram) {
  std::uint64_t h = kFnvOffset ^ kFingerprintSeed;
  for (unsigned char c : gram) {
    h ^= c;
    h *= kFnvPrime;
  }
  return SplitMix64(h);
}

}  // namespace

Molecule Molecule::Canonicalize(std::string_view raw) {
  std::size_t begin = 0;
  std::size_t end = raw.size();
  while (begin < end && IsSpace(raw[begin])) ++begin;
  while (end > begin && IsSpace(raw[end - 1])) --end;
  if (begin == end) throw EmptyMolecule("molecule text is empty");
  const std::string_view body = raw.substr(begin, end - begin);
  if (body.find_first_of("\n\r") != std::string_view::npos) {
    throw EmptyMolecule("molecule text contains a line break");
  }
  return Molecule(std::string(body));
}

std::ostream& operator<<(std::ostream& os, const Molecule& m) {
  return os << m.text();
}

Fingerprint ComputeFingerprint(const Molecule& m) {
  Fingerprint bits;
  const std::string_view text = m.text();
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t i = 0; i + n <= text.size(); ++i) {
      bits.set(HashNgram(text.substr(i, n)) % kFingerprintBits);
    }
  }
  return bits;
}

double Tanimoto(const Fingerprint& a, const Fingerprint& b) {
  const std::size_t uni = (a | b).count();
  if (uni == 0) return 0.0;
  return static_cast<double>((a & b).count()) / static_cast<double>(uni);
}

BuildingBlockSet::BuildingBlockSet(std::vector<Molecule> members) {
  members_.reserve(members.size());
  for (auto& m : members) {
    if (!index_.insert(m.text()).second) continue;
    fingerprints_.push_back(ComputeFingerprint(m));
    members_.push_back(std::move(m));
  }
}

bool BuildingBlockSet::Contains(const Molecule& m) const {
  return index_.find(std::string_view(m.text())) != index_.end();
}

double BuildingBlockSet::SimilarityScore(const Molecule& m) const {
  if (members_.empty()) throw EmptyBuildingBlockSet();
  if (Contains(m)) return 1.0;
  const Fingerprint fp = ComputeFingerprint(m);
  double best = 0.0;
  for (const auto& other : fingerprints_) {
    best = std::max(best, Tanimoto(fp, other));
  }
  return best;
}

BuildingBlockSet ParseBuildingBlocks(std::istream& in,
                                     const std::string& source) {
  std::vector<Molecule> members;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      members.push_back(Molecule::Canonicalize(line));
    } catch (const EmptyMolecule& e) {
      throw ParseError(source, line_no, e.what());
    }
  }
  return BuildingBlockSet(std::move(members));
}

BuildingBlockSet LoadBuildingBlocks(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open building-block file");
  return ParseBuildingBlocks(in, path);
}

void WriteBuildingBlocks(std::ostream& out, const BuildingBlockSet& blocks) {
  for (const auto& m : blocks.members()) {
    if (m.text().front() == '#') {
      throw Error("molecule '" + m.text() + "' would read back as a comment");
    }
    out << m.text() << '\n';
  }
}

}  // namespace retroeda
