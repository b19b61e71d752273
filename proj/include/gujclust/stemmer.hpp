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
/// Single-pass longest-match suffix stripping, keyed by POS tag.

#pragma once

#include <algorithm>
#include <charconv>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "gujclust/corpus_io.hpp"
#include "gujclust/errors.hpp"
#include "gujclust/tag_partition.hpp"
#include "gujclust/utf8.hpp"

namespace gujclust {

/// Tag under which suffixes apply to every tag.
inline constexpr std::string_view kAnyTag = "*";

namespace detail {

inline constexpr std::string_view kSeedInventoryDocument =
  "# tag<TAB>suffix[,suffix...]; '*' applies to every tag\n"
  "!min_stem_len=2\n"
  "NN\to,nI\n"
  "*\ts\n";

}  // namespace detail

class SuffixInventory {
 public:
  SuffixInventory() = default;

  /// Candidate suffixes for @p tag: the tag's own list, then the `*` list.
  std::vector<std::string> suffixes_for(std::string_view tag) const
  {
    std::vector<std::string> out;
    if (auto it = entries_.find(tag); it != entries_.end()) out = it->second;
    if (tag != kAnyTag)
      if (auto it = entries_.find(kAnyTag); it != entries_.end()) out.insert(out.end(), it->second.begin(), it->second.end());
    return out;
  }

  /// Appends @p suffix to @p tag's list. Returns false for an empty or
  /// repeated suffix.
  bool add(std::string tag, std::string suffix)
  {
    if (suffix.empty()) return false;
    auto& list = entries_[std::move(tag)];
    if (std::find(list.begin(), list.end(), suffix) != list.end()) return false;
    list.push_back(std::move(suffix));
    return true;
  }

  std::size_t min_stem_len() const noexcept { return min_stem_len_; }
  void set_min_stem_len(std::size_t n)
  {
    if (n < 1) throw Error("min_stem_len must be at least 1");
    min_stem_len_ = n;
  }

  const std::map<std::string, std::vector<std::string>, std::less<>>& entries() const noexcept { return entries_; }

  /// Parses `<TAG>\t<suffix>[,<suffix>...]` lines with an optional
  /// `!min_stem_len=<n>` header. Tags are upper-cased.
  static SuffixInventory load(std::istream& in)
  {
    SuffixInventory inv;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
      ++line_no;
      std::string_view line = detail::trim(raw);
      if (line.empty() || line.front() == '#') continue;
      if (line.front() == '!') {
        constexpr std::string_view key = "!min_stem_len=";
        if (!line.starts_with(key)) throw MalformedRow(line_no, "unknown directive");
        std::string_view num = line.substr(key.size());
        std::size_t n = 0;
        auto [p, ec] = std::from_chars(num.data(), num.data() + num.size(), n);
        if (ec != std::errc{} || p != num.data() + num.size() || n < 1)
          throw MalformedRow(line_no, "min_stem_len must be a positive integer");
        inv.min_stem_len_ = n;
        continue;
      }
      if (!utf8::valid(line)) throw MalformedRow(line_no, "invalid UTF-8");
      auto tab = line.find('\t');
      if (tab == std::string_view::npos) throw MalformedRow(line_no, "expected <TAG><TAB><suffixes>");
      std::string_view tag = detail::trim(line.substr(0, tab));
      if (tag.empty()) throw MalformedRow(line_no, "empty tag");
      std::string canon = tag == kAnyTag ? std::string(kAnyTag) : canonical_tag(tag, false);

      std::string_view list = line.substr(tab + 1);
      std::size_t start = 0;
      for (;;) {
        auto comma = list.find(',', start);
        std::string_view sfx = detail::trim(list.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        if (sfx.empty()) throw MalformedRow(line_no, "empty suffix");
        if (!inv.add(canon, std::string(sfx))) throw MalformedRow(line_no, "duplicate suffix '" + std::string(sfx) + "'");
        if (comma == std::string_view::npos) break;
        start = comma + 1;
      }
    }
    return inv;
  }

  /// {NN: o, nI} plus `s` for every tag, min_stem_len 2.
  static const SuffixInventory& seed()
  {
    static const SuffixInventory inv = [] {
      std::istringstream in{std::string(detail::kSeedInventoryDocument)};
      return load(in);
    }();
    return inv;
  }

 private:
  std::map<std::string, std::vector<std::string>, std::less<>> entries_;
  std::size_t min_stem_len_ = 2;
};

struct StemResult {
  std::string surface;
  std::string root;
  std::string suffix;  // empty when nothing was stripped
  std::string tag;

  bool operator==(const StemResult&) const = default;
};

/// Strips the longest suffix listed for @p tag that leaves at least
/// min_stem_len codepoints. Equal-length candidates: first listed wins.
inline StemResult stem(std::string_view word, std::string_view tag, const SuffixInventory& inv)
{
  const std::size_t word_len = utf8::length(word);
  std::string_view chosen;
  std::size_t chosen_len = 0;
  for (const std::string& sfx : inv.suffixes_for(tag)) {
    if (!word.ends_with(sfx)) continue;
    std::size_t sfx_len = utf8::length(sfx);
    if (sfx_len >= word_len || word_len - sfx_len < inv.min_stem_len()) continue;
    if (sfx_len > chosen_len) {
      chosen = sfx;
      chosen_len = sfx_len;
    }
  }
  return {std::string(word), std::string(word.substr(0, word.size() - chosen.size())), std::string(chosen),
          std::string(tag)};
}

/// Stems every bucket member with its bucket's tag, in tag-set order, then
/// passes `other` and `untagged` words through unchanged.
inline std::vector<StemResult> stem_partition(const Partition& p, const SuffixInventory& inv)
{
  std::vector<StemResult> out;
  out.reserve(p.token_count());
  for (std::size_t i = 0; i < p.symbols.size(); ++i)
    for (const std::string& w : p.buckets[i]) out.push_back(stem(w, p.symbols[i], inv));
  for (const auto& [w, tag] : p.other) out.push_back({w, w, "", tag});
  for (const std::string& w : p.untagged) out.push_back({w, w, "", std::string(kUntagged)});
  return out;
}

/// `surface<TAB>root<TAB>suffix<TAB>tag` per line.
inline void write_stem_results(std::ostream& out, const std::vector<StemResult>& results)
{
  for (const StemResult& r : results) out << r.surface << '\t' << r.root << '\t' << r.suffix << '\t' << r.tag << '\n';
}

}  // namespace gujclust
