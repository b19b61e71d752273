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

#include <filesystem>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "gujclust/corpus_io.hpp"
#include "temp_dir.hpp"

namespace gujclust {
namespace {

TaggedCorpus parse(const std::string& text, CorpusFormat f = CorpusFormat::apostrophe)
{
  std::istringstream in(text);
  return parse_corpus(in, f);
}

TEST(ParseCorpus, SpaceSeparatedApostropheTag)
{
  auto c = parse("mAhiwinI 'NN\n");
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c.tokens[0], (Token{"mAhiwinI", "NN"}));
  EXPECT_EQ(c.line_index, std::vector<std::size_t>{1});
}

TEST(ParseCorpus, EmptyStream)
{
  EXPECT_TRUE(parse("").empty());
  EXPECT_TRUE(parse("\n\n  \n").empty());
}

TEST(ParseCorpus, AttachedTagsAreUppercasedWithLineIndexes)
{
  auto c = parse("a'NN b'vm\nc'Vaux\n");
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c.tokens[0], (Token{"a", "NN"}));
  EXPECT_EQ(c.tokens[1], (Token{"b", "VM"}));
  EXPECT_EQ(c.tokens[2], (Token{"c", "VAUX"}));
  EXPECT_EQ(c.line_index, (std::vector<std::size_t>{1, 1, 2}));
}

TEST(ParseCorpus, UnitsWithoutTagAreUntagged)
{
  auto c = parse("pustak grAhak 'nn\nkaSuM\n");
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c.tokens[0], (Token{"pustak", "UNTAGGED"}));
  EXPECT_EQ(c.tokens[1], (Token{"grAhak", "NN"}));
  EXPECT_EQ(c.tokens[2], (Token{"kaSuM", "UNTAGGED"}));
  EXPECT_EQ(c.line_index, (std::vector<std::size_t>{1, 1, 2}));
}

TEST(ParseCorpus, TagDoesNotCarryAcrossLines)
{
  EXPECT_THROW(parse("word\n'NN\n"), EmptyWord);
}

TEST(ParseCorpus, SeparatorWithoutWord)
{
  try {
    parse("a'NN\n'JJ b'CC\n");
    FAIL() << "expected EmptyWord";
  } catch (const EmptyWord& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(ParseCorpus, InvalidEncodingCarriesLine)
{
  try {
    parse("a'NN\nb\xFF'NN\n");
    FAIL() << "expected InvalidEncoding";
  } catch (const InvalidEncoding& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(ParseCorpus, TabFormat)
{
  auto c = parse("mAhiwinI\tNN\r\nkare\tvm\n\npustak\n", CorpusFormat::tab);
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c.tokens[0], (Token{"mAhiwinI", "NN"}));
  EXPECT_EQ(c.tokens[1], (Token{"kare", "VM"}));
  EXPECT_EQ(c.tokens[2], (Token{"pustak", "UNTAGGED"}));
  EXPECT_EQ(c.line_index, (std::vector<std::size_t>{1, 2, 4}));
  EXPECT_THROW(parse("\tNN\n", CorpusFormat::tab), EmptyWord);
  EXPECT_THROW(parse("two words\tNN\n", CorpusFormat::tab), MalformedLine);
}

TEST(WriteCategoryFile, WritesOneWordPerLine)
{
  testing::TempDir dir;
  std::vector<std::string> words{"grAhak", "pustak"};
  auto path = dir.path() / "nn.txt";
  EXPECT_EQ(write_category_file(words, path), 2u);
  EXPECT_EQ(read_lines(path), words);
  EXPECT_EQ(testing::slurp(path), "grAhak\npustak\n");

  EXPECT_EQ(write_category_file({}, path), 0u);
  EXPECT_EQ(std::filesystem::file_size(path), 0u);
}

TEST(WriteCategoryFile, UnwritablePath)
{
  testing::TempDir dir;
  std::vector<std::string> words{"x"};
  EXPECT_THROW(write_category_file(words, dir.path() / "missing" / "nn.txt"), IoFailure);
}

// -- properties --------------------------------------------------------------

std::string random_apostrophe_text(std::mt19937_64& rng)
{
  static const char* words[] = {"mAhiwinI", "grAhak", "kare", "Ane", "pustak", "Cod", "kAma"};
  static const char* tags[] = {"NN", "vm", "Vaux", "jj", "XYZ", "psp"};
  std::uniform_int_distribution<int> nl(0, 12), nu(0, 6), w(0, 6), t(0, 5), style(0, 2);
  std::string text;
  for (int l = nl(rng); l > 0; --l) {
    for (int u = nu(rng); u > 0; --u) {
      text += words[w(rng)];
      switch (style(rng)) {
        case 0: text += std::string("'") + tags[t(rng)]; break;
        case 1: text += std::string(" '") + tags[t(rng)]; break;
        default: break;
      }
      text += "  ";
    }
    text += '\n';
  }
  return text;
}

// Whitespace-split oracle: every piece is a token except a `'TAG` piece,
// which attaches to the word before it.
std::size_t naive_token_count(const std::string& text)
{
  std::istringstream lines(text);
  std::string line;
  std::size_t n = 0;
  while (std::getline(lines, line)) {
    std::istringstream pieces(line);
    std::string piece;
    while (pieces >> piece)
      if (piece[0] != '\'') ++n;
  }
  return n;
}

TEST(CorpusProperties, NoUnitIsDropped)
{
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    std::string text = random_apostrophe_text(rng);
    EXPECT_EQ(parse(text).size(), naive_token_count(text)) << text;
  }
}

TEST(CorpusProperties, TabSerializationIsIdempotent)
{
  std::mt19937_64 rng(12);
  for (int i = 0; i < 300; ++i) {
    TaggedCorpus c0 = parse(random_apostrophe_text(rng));
    std::ostringstream s1;
    write_corpus(s1, c0);
    TaggedCorpus c1 = parse(s1.str(), CorpusFormat::tab);
    EXPECT_EQ(c1.tokens, c0.tokens);
    std::ostringstream s2;
    write_corpus(s2, c1);
    EXPECT_EQ(parse(s2.str(), CorpusFormat::tab), c1);
    EXPECT_EQ(s2.str(), s1.str());
  }
}

}  // namespace
}  // namespace gujclust
