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

/// @file
/// Reading POS-tagged corpora and writing per-category word files.
///
/// Two input layouts are understood:
///
///   apostrophe   units separated by whitespace, any number per line.
///                A unit is `word'TAG`, or `word` followed by a separate
///                `'TAG` unit on the same line (`mAhiwinI 'NN`).
///   tab          one `word<TAB>TAG` pair per line.
///
/// Tags are canonicalised to upper case. A word with no tag becomes a token
/// tagged UNTAGGED.

#pragma once

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gujclust/errors.hpp"
#include "gujclust/utf8.hpp"

namespace gujclust {

inline constexpr std::string_view kUntagged = "UNTAGGED";

enum class CorpusFormat { apostrophe, tab };

struct Token {
  std::string surface;
  std::string tag;

  bool untagged() const noexcept { return tag == kUntagged; }
  bool operator==(const Token&) const = default;
};

struct TaggedCorpus {
  std::vector<Token> tokens;
  std::vector<std::size_t> line_index;  // 1-based source line per token

  std::size_t size() const noexcept { return tokens.size(); }
  bool empty() const noexcept { return tokens.empty(); }

  void push_back(Token t, std::size_t line)
  {
    tokens.push_back(std::move(t));
    line_index.push_back(line);
  }

  bool operator==(const TaggedCorpus&) const = default;
};

namespace detail {

inline bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }

inline std::string_view trim(std::string_view s)
{
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split_ws(std::string_view s)
{
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_space(s[i])) ++i;
    std::size_t j = i;
    while (j < s.size() && !is_space(s[j])) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace detail

/// Upper-cases @p raw, optionally after dropping one leading apostrophe.
/// An empty result maps to UNTAGGED.
inline std::string canonical_tag(std::string_view raw, bool strip_apostrophe = true)
{
  if (strip_apostrophe && !raw.empty() && raw.front() == '\'') raw.remove_prefix(1);
  if (raw.empty()) return std::string(kUntagged);
  std::string tag(raw);
  std::transform(tag.begin(), tag.end(), tag.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return tag;
}

inline TaggedCorpus parse_corpus(std::istream& in, CorpusFormat format = CorpusFormat::apostrophe)
{
  TaggedCorpus corpus;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!utf8::valid(raw)) throw InvalidEncoding(line_no);
    std::string_view line = raw;

    if (format == CorpusFormat::tab) {
      auto tab = line.find('\t');
      std::string_view word = detail::trim(line.substr(0, tab));
      std::string_view tag = tab == std::string_view::npos ? std::string_view{} : detail::trim(line.substr(tab + 1));
      if (word.empty()) {
        if (tag.empty()) continue;
        throw EmptyWord(line_no);
      }
      if (detail::split_ws(word).size() != 1) throw MalformedLine(line_no, "word field contains whitespace");
      if (detail::split_ws(tag).size() > 1) throw MalformedLine(line_no, "tag field contains whitespace");
      corpus.push_back({std::string(word), canonical_tag(tag, false)}, line_no);
      continue;
    }

    // A bare word is held back until we know whether a `'TAG` unit follows.
    std::string_view pending;
    auto flush = [&] {
      if (!pending.empty()) corpus.push_back({std::string(pending), std::string(kUntagged)}, line_no);
      pending = {};
    };
    for (std::string_view unit : detail::split_ws(line)) {
      if (unit.front() == '\'') {
        if (pending.empty()) throw EmptyWord(line_no);
        corpus.push_back({std::string(pending), canonical_tag(unit)}, line_no);
        pending = {};
        continue;
      }
      flush();
      auto sep = unit.find('\'');
      if (sep == std::string_view::npos) {
        pending = unit;
      } else {
        corpus.push_back({std::string(unit.substr(0, sep)), canonical_tag(unit.substr(sep + 1))}, line_no);
      }
    }
    flush();
  }
  if (in.bad()) throw IoFailure("<stream>", "read error");
  return corpus;
}

inline TaggedCorpus parse_corpus_file(const std::filesystem::path& path,
                                      CorpusFormat format = CorpusFormat::apostrophe)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure(path.string(), "cannot open for reading");
  return parse_corpus(in, format);
}

/// Writes @p corpus in tab format; untagged tokens are written as a bare
/// word so that reparsing restores UNTAGGED.
inline void write_corpus(std::ostream& out, const TaggedCorpus& corpus)
{
  for (const Token& t : corpus.tokens) {
    out << t.surface;
    if (!t.untagged()) out << '\t' << t.tag;
    out << '\n';
  }
}

/// Writes one line per entry, overwriting @p path. Returns the line count.
inline std::size_t write_lines(std::span<const std::string> lines, const std::filesystem::path& path)
{
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoFailure(path.string(), "cannot open for writing");
  for (const std::string& l : lines) out << l << '\n';
  out.flush();
  if (!out) throw IoFailure(path.string(), "write failed");
  return lines.size();
}

inline std::size_t write_category_file(std::span<const std::string> words, const std::filesystem::path& path)
{
  return write_lines(words, path);
}

/// Reads a file written by write_lines back into its lines.
inline std::vector<std::string> read_lines(const std::filesystem::path& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure(path.string(), "cannot open for reading");
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  if (in.bad()) throw IoFailure(path.string(), "read error");
  return lines;
}

}  // namespace gujclust
