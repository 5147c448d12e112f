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

#include <gtest/gtest.h>

#include <algorithm>
#include <cstddef>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "retroeda/chem.h"
#include "retroeda/errors.h"

namespace retroeda {
namespace {

Molecule M(const std::string& s) { return Molecule::Canonicalize(s); }

// Bit-by-bit reference, independent of std::bitset::count.
double ReferenceTanimoto(const Fingerprint& a, const Fingerprint& b) {
  int both = 0;
  int either = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] && b[i]) ++both;
    if (a[i] || b[i]) ++either;
  }
  return either == 0 ? 0.0 : static_cast<double>(both) / either;
}

std::string RandomText(std::mt19937& gen, int len) {
  static const std::string kAlphabet = "CNOSPFIclnos()=#[]+-123@";
  std::uniform_int_distribution<std::size_t> pick(0, kAlphabet.size() - 1);
  std::string s;
  for (int i = 0; i < len; ++i) s += kAlphabet[pick(gen)];
  return s;
}

TEST(Canonicalize, TrimsSurroundingWhitespace) {
  EXPECT_EQ(M("  CCO ").text(), "CCO");
}

TEST(Canonicalize, IsIdempotent) {
  EXPECT_EQ(M("CCO").text(), "CCO");
  EXPECT_EQ(M(M(" CCO\t").text()), M("CCO"));
}

TEST(Canonicalize, KeepsInteriorCharacters) {
  EXPECT_EQ(M(" C C\tO ").text(), "C C\tO");
}

TEST(Canonicalize, RejectsEmptyAndBlank) {
  EXPECT_THROW(M(""), EmptyMolecule);
  EXPECT_THROW(M("   \t "), EmptyMolecule);
  EXPECT_THROW(M("C\nO"), EmptyMolecule);
}

TEST(Fingerprint, SingleCharacterSetsOneBit) {
  EXPECT_EQ(ComputeFingerprint(M("A")).count(), 1u);
}

TEST(Fingerprint, TwoCharactersSetAtMostThreeBits) {
  const auto fp = ComputeFingerprint(M("AB"));
  EXPECT_GE(fp.count(), 1u);
  EXPECT_LE(fp.count(), 3u);
}

TEST(Fingerprint, IsDeterministic) {
  EXPECT_EQ(ComputeFingerprint(M("CCO")), ComputeFingerprint(M("CCO")));
}

TEST(Fingerprint, BitCountBoundedByDistinctNgrams) {
  std::mt19937 gen(11);
  for (int trial = 0; trial < 500; ++trial) {
    const std::string text = RandomText(gen, 1 + trial % 30);
    std::set<std::string> grams;
    for (std::size_t n = 1; n <= 3; ++n) {
      for (std::size_t i = 0; i + n <= text.size(); ++i) {
        grams.insert(text.substr(i, n));
      }
    }
    const auto fp = ComputeFingerprint(M(text));
    EXPECT_GE(fp.count(), 1u) << text;
    EXPECT_LE(fp.count(), grams.size()) << text;
  }
}

TEST(Tanimoto, IdenticalVectorsScoreOne) {
  const auto fp = ComputeFingerprint(M("CC(=O)O"));
  EXPECT_EQ(Tanimoto(fp, fp), 1.0);
}

TEST(Tanimoto, DisjointVectorsScoreZero) {
  Fingerprint a;
  Fingerprint b;
  a.set(3);
  a.set(40);
  b.set(7);
  EXPECT_EQ(Tanimoto(a, b), 0.0);
}

TEST(Tanimoto, HandCountedExample) {
  // a = 1100..., b = 1010...: one shared bit, three set in total.
  Fingerprint a;
  Fingerprint b;
  a.set(0);
  a.set(1);
  b.set(0);
  b.set(2);
  EXPECT_DOUBLE_EQ(Tanimoto(a, b), 1.0 / 3.0);
}

TEST(Tanimoto, BothEmptyIsZero) {
  EXPECT_EQ(Tanimoto(Fingerprint{}, Fingerprint{}), 0.0);
}

TEST(Tanimoto, BoundedSymmetricAndMatchesReference) {
  std::mt19937 gen(5);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = ComputeFingerprint(M(RandomText(gen, 3 + trial % 20)));
    const auto b = ComputeFingerprint(M(RandomText(gen, 3 + trial % 17)));
    const double ab = Tanimoto(a, b);
    EXPECT_GE(ab, 0.0);
    EXPECT_LE(ab, 1.0);
    EXPECT_EQ(ab, Tanimoto(b, a));
    EXPECT_DOUBLE_EQ(ab, ReferenceTanimoto(a, b));
  }
}

TEST(BuildingBlockSet, KeepsFirstInsertionOrderAndDropsDuplicates) {
  BuildingBlockSet set({M("CO"), M("CC"), M("CO"), M("N")});
  ASSERT_EQ(set.size(), 3u);
  EXPECT_EQ(set.members()[0], M("CO"));
  EXPECT_EQ(set.members()[1], M("CC"));
  EXPECT_EQ(set.members()[2], M("N"));
  EXPECT_EQ(set.fingerprints().size(), 3u);
}

TEST(BuildingBlockSet, MembershipIsExactString) {
  BuildingBlockSet set({M("CCO")});
  EXPECT_TRUE(set.Contains(M(" CCO ")));
  EXPECT_FALSE(set.Contains(M("OCC")));
  EXPECT_FALSE(set.Contains(M("CCOC")));
}

TEST(SimilarityScore, MemberScoresExactlyOne) {
  BuildingBlockSet set({M("CCO"), M("NNN")});
  EXPECT_EQ(SimilarityScore(M("CCO"), set), 1.0);
}

TEST(SimilarityScore, DisjointSingleMemberScoresZero) {
  BuildingBlockSet set({M("XYZ")});
  const Molecule m = M("abc");
  ASSERT_EQ(Tanimoto(ComputeFingerprint(m), set.fingerprints()[0]), 0.0);
  EXPECT_EQ(SimilarityScore(m, set), 0.0);
}

TEST(SimilarityScore, TakesBestMember) {
  // Two members at different distances from m; the score must equal the
  // larger pairwise value computed bit by bit here.
  const Molecule m = M("CCCCCCOO");
  const Molecule near = M("CCCCCCO");
  const Molecule far = M("CCOO");
  const double t_near =
      ReferenceTanimoto(ComputeFingerprint(m), ComputeFingerprint(near));
  const double t_far =
      ReferenceTanimoto(ComputeFingerprint(m), ComputeFingerprint(far));
  ASSERT_GT(t_near, 0.0);
  ASSERT_GT(t_far, 0.0);
  ASSERT_NE(t_near, t_far);
  BuildingBlockSet set({far, near});
  EXPECT_DOUBLE_EQ(SimilarityScore(m, set), std::max(t_near, t_far));
}

TEST(SimilarityScore, EmptySetThrows) {
  BuildingBlockSet empty;
  EXPECT_THROW(SimilarityScore(M("C"), empty), EmptyBuildingBlockSet);
}

TEST(SimilarityScore, MonotoneUnderGrowth) {
  std::mt19937 gen(17);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Molecule> members;
    for (int i = 0; i < 1 + trial % 8; ++i) {
      members.push_back(M(RandomText(gen, 2 + i)));
    }
    const Molecule m = M(RandomText(gen, 6));
    const double before = BuildingBlockSet(members).SimilarityScore(m);
    members.push_back(M(RandomText(gen, 5)));
    const double after = BuildingBlockSet(members).SimilarityScore(m);
    EXPECT_LE(before, after);
    members.push_back(m);
    EXPECT_EQ(BuildingBlockSet(members).SimilarityScore(m), 1.0);
  }
}

TEST(BuildingBlockFile, SkipsBlanksAndComments) {
  std::istringstream in("# header\nCCO\n\n  \nNC \n#CC\nCCO\n");
  const auto set = ParseBuildingBlocks(in);
  ASSERT_EQ(set.size(), 2u);
  EXPECT_TRUE(set.Contains(M("CCO")));
  EXPECT_TRUE(set.Contains(M("NC")));
  EXPECT_FALSE(set.Contains(M("#CC")));
}

TEST(BuildingBlockFile, RoundTrips) {
  BuildingBlockSet set({M("CCO"), M("N#N"), M("[Na+]")});
  std::ostringstream out;
  WriteBuildingBlocks(out, set);
  std::istringstream in(out.str());
  const auto back = ParseBuildingBlocks(in);
  EXPECT_EQ(back.members(), set.members());
}

}  // namespace
}  // namespace retroeda
