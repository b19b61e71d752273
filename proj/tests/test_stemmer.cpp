/*
 * Copyright (c) 2026, The gujclust Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <fstream>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "gujclust/stemmer.hpp"
#include "oracles.hpp"

namespace gujclust {
namespace {

SuffixInventory inventory_from(const std::string& doc)
{
  std::istringstream in(doc);
  return SuffixInventory::load(in);
}

TEST(Stem, PublishedExamples)
{
  const auto& inv = SuffixInventory::seed();
  EXPECT_EQ(stem("mAhiwinI", "NN", inv), (StemResult{"mAhiwinI", "mAhiwi", "nI", "NN"}));
  EXPECT_EQ(stem("cats", "NN", inv), (StemResult{"cats", "cat", "s", "NN"}));
}

TEST(Stem, MinimumStemLengthBlocksStripping)
{
  const auto& inv = SuffixInventory::seed();
  EXPECT_EQ(stem("o", "NN", inv), (StemResult{"o", "o", "", "NN"}));
  EXPECT_EQ(stem("ko", "NN", inv), (StemResult{"ko", "ko", "", "NN"}));
  EXPECT_EQ(stem("kao", "NN", inv).root, "ka");
}

TEST(Stem, NoApplicableSuffixIsIdentity)
{
  EXPECT_EQ(stem("kare", "VM", SuffixInventory::seed()), (StemResult{"kare", "kare", "", "VM"}));
  EXPECT_EQ(stem("kare", "ZZ", SuffixInventory{}), (StemResult{"kare", "kare", "", "ZZ"}));
}

TEST(Stem, LongestSuffixWins)
{
  auto inv = inventory_from("VM\tyo,I,o,ryo\n");
  EXPECT_EQ(stem("karyo", "VM", inv).suffix, "ryo");
  EXPECT_EQ(stem("karI", "VM", inv).suffix, "I");
  auto nested = inventory_from("NN\tAM,oM\nNN\tM\n");
  EXPECT_EQ(stem("gAmoM", "NN", nested).suffix, "oM");
}

TEST(Stem, SinglePassOnly)
{
  auto inv = inventory_from("!min_stem_len=1\nNN\tnI\n");
  EXPECT_EQ(stem("ghnInI", "NN", inv).root, "ghnI");
}

TEST(Stem, CountsCodepoints)
{
  auto inv = inventory_from("NN\tની\n");
  // root "મા" is two codepoints, enough for min_stem_len 2
  EXPECT_EQ(stem("માની", "NN", inv), (StemResult{"માની", "મા", "ની", "NN"}));
  EXPECT_EQ(stem("મની", "NN", inv).suffix, "");
}

TEST(StemPartition, VerbBucketExample)
{
  auto inv = inventory_from("VM\tyo,I\n");
  Partition p = Partition::empty_for(TagSet::gujarati());
  p.buckets[*TagSet::gujarati().index_of("VM")] = {"karyo", "karI"};
  auto r = stem_partition(p, inv);
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0], (StemResult{"karyo", "kar", "yo", "VM"}));
  EXPECT_EQ(r[1], (StemResult{"karI", "kar", "I", "VM"}));
  for (const auto& w : {"karyo", "karI"}) {
    auto [root, sfx] = oracle::brute_force_stem(w, {"yo", "I"}, 2);
    EXPECT_EQ(root, "kar");
    (void)sfx;
  }
}

TEST(StemPartition, SeededNounBucket)
{
  Partition p = Partition::empty_for(TagSet::gujarati());
  p.buckets[0] = {"mAhiwinI"};
  auto r = stem_partition(p, SuffixInventory::seed());
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0], (StemResult{"mAhiwinI", "mAhiwi", "nI", "NN"}));
}

TEST(StemPartition, EmptyAndPassThrough)
{
  EXPECT_TRUE(stem_partition(Partition::empty_for(TagSet::gujarati()), SuffixInventory::seed()).empty());

  Partition p = Partition::empty_for(TagSet::gujarati());
  p.other = {{"cats", "XYZ"}};
  p.untagged = {"dogs"};
  auto r = stem_partition(p, SuffixInventory::seed());
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0], (StemResult{"cats", "cats", "", "XYZ"}));
  EXPECT_EQ(r[1], (StemResult{"dogs", "dogs", "", "UNTAGGED"}));
}

TEST(SuffixInventory, LoadsDocument)
{
  auto inv = inventory_from("# comment\n!min_stem_len=3\nnn\to, nI\nVM\tyo\n*\ts\n");
  EXPECT_EQ(inv.min_stem_len(), 3u);
  EXPECT_EQ(inv.suffixes_for("NN"), (std::vector<std::string>{"o", "nI", "s"}));
  EXPECT_EQ(inv.suffixes_for("JJ"), (std::vector<std::string>{"s"}));
}

TEST(SuffixInventory, ShippedSeedMatchesBuiltin)
{
  std::ifstream in(std::string(GUJCLUST_DATA_DIR) + "/suffixes.tsv");
  ASSERT_TRUE(in);
  auto inv = SuffixInventory::load(in);
  EXPECT_EQ(inv.entries(), SuffixInventory::seed().entries());
  EXPECT_EQ(inv.min_stem_len(), SuffixInventory::seed().min_stem_len());
}

TEST(SuffixInventory, LoadErrors)
{
  EXPECT_THROW(inventory_from("NN\to,o\n"), MalformedRow);
  EXPECT_THROW(inventory_from("NN\to,,nI\n"), MalformedRow);
  EXPECT_THROW(inventory_from("NN o\n"), MalformedRow);
  EXPECT_THROW(inventory_from("!min_stem_len=0\n"), MalformedRow);
  EXPECT_THROW(inventory_from("!min_stem_len=x\n"), MalformedRow);
  EXPECT_THROW(inventory_from("!stem=2\n"), MalformedRow);
  try {
    inventory_from("NN\to\nVM\tyo,yo\n");
    FAIL();
  } catch (const MalformedRow& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(StemProperties, ReconstructionAndBruteForceAgreement)
{
  std::mt19937_64 rng(51);
  std::uniform_int_distribution<int> len(1, 9), ch(0, 3), nsfx(0, 5), sfx_len(1, 4), min_len(1, 3);
  auto random_string = [&](int n) {
    std::string s;
    for (int k = 0; k < n; ++k) s.push_back(static_cast<char>('a' + ch(rng)));
    return s;
  };
  for (int trial = 0; trial < 3000; ++trial) {
    SuffixInventory inv;
    inv.set_min_stem_len(static_cast<std::size_t>(min_len(rng)));
    std::vector<std::string> listed;
    for (int k = nsfx(rng); k > 0; --k) {
      std::string s = random_string(sfx_len(rng));
      if (inv.add("NN", s)) listed.push_back(s);
    }
    std::string word = random_string(len(rng));
    StemResult r = stem(word, "NN", inv);
    ASSERT_EQ(r.root + r.suffix, word);
    if (!r.suffix.empty()) {
      EXPECT_GE(r.root.size(), inv.min_stem_len());
      EXPECT_NE(std::find(listed.begin(), listed.end(), r.suffix), listed.end());
    }
    auto [root, suffix] = oracle::brute_force_stem(word, listed, inv.min_stem_len());
    EXPECT_EQ(r.root, root) << word;
    EXPECT_EQ(r.suffix, suffix) << word;
  }
}

}  // namespace
}  // namespace gujclust
