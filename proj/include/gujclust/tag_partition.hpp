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
/// Supervised partitioning of a tagged corpus into one word list per tag.
///
/// Every token lands in exactly one place: the bucket of its tag when the
/// tag is in the tag set, the `other` list for any other tag, or the
/// `untagged` list. Nothing is dropped, so bucket sizes always add up to
/// the token count.

#pragma once

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <future>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gujclust/corpus_io.hpp"
#include "gujclust/errors.hpp"

namespace gujclust {

struct TagEntry {
  std::string symbol;
  std::string label;
};

/// Ordered inventory of recognised tags.
class TagSet {
 public:
  explicit TagSet(std::vector<TagEntry> entries) : entries_(std::move(entries))
  {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      const std::string& sym = entries_[i].symbol;
      if (sym.empty()) throw Error("tag set: empty symbol");
      if (sym == kUntagged) throw Error("tag set: UNTAGGED is reserved");
      for (char c : sym)
        if (std::islower(static_cast<unsigned char>(c)) || std::isspace(static_cast<unsigned char>(c)))
          throw Error("tag set: symbol '" + sym + "' is not upper case");
      for (std::size_t j = 0; j < i; ++j)
        if (entries_[j].symbol == sym) throw DuplicateKey(sym);
    }
  }

  /// The eight-category set used for Gujarati.
  static const TagSet& gujarati()
  {
    static const TagSet set({
      {"NN", "Noun"},
      {"JJ", "Adjective"},
      {"PRP", "Preposition"},
      {"PSP", "Post position"},
      {"CC", "Conjunction"},
      {"VM", "Verb Main"},
      {"VAUX", "Verb Auxiliary"},
      {"NNC", "Special symbol"},
    });
    return set;
  }

  std::size_t size() const noexcept { return entries_.size(); }
  const std::vector<TagEntry>& entries() const noexcept { return entries_; }
  const TagEntry& operator[](std::size_t i) const { return entries_[i]; }

  std::optional<std::size_t> index_of(std::string_view symbol) const
  {
    for (std::size_t i = 0; i < entries_.size(); ++i)
      if (entries_[i].symbol == symbol) return i;
    return std::nullopt;
  }

 private:
  std::vector<TagEntry> entries_;
};

struct Partition {
  std::vector<std::string> symbols;               // tag set order
  std::vector<std::vector<std::string>> buckets;  // parallel to symbols
  std::vector<std::pair<std::string, std::string>> other;  // (word, raw tag)
  std::vector<std::string> untagged;

  /// Empty partition over @p tags.
  static Partition empty_for(const TagSet& tags)
  {
    Partition p;
    for (const TagEntry& e : tags.entries()) p.symbols.push_back(e.symbol);
    p.buckets.resize(p.symbols.size());
    return p;
  }

  const std::vector<std::string>& bucket(std::string_view symbol) const
  {
    for (std::size_t i = 0; i < symbols.size(); ++i)
      if (symbols[i] == symbol) return buckets[i];
    throw Error("partition has no bucket '" + std::string(symbol) + "'");
  }

  std::size_t token_count() const noexcept
  {
    std::size_t n = other.size() + untagged.size();
    for (const auto& b : buckets) n += b.size();
    return n;
  }

  bool operator==(const Partition&) const = default;
};

/// Single stable pass over @p corpus.
inline Partition partition(const TaggedCorpus& corpus, const TagSet& tags = TagSet::gujarati())
{
  Partition p = Partition::empty_for(tags);
  for (const Token& t : corpus.tokens) {
    if (t.untagged()) {
      p.untagged.push_back(t.surface);
    } else if (auto idx = tags.index_of(t.tag)) {
      p.buckets[*idx].push_back(t.surface);
    } else {
      p.other.emplace_back(t.surface, t.tag);
    }
  }
  return p;
}

// ---------------------------------------------------------------------------
// statistics

struct PartitionStats {
  std::vector<std::pair<std::string, std::size_t>> rows;  // per tag symbol
  std::size_t other = 0;
  std::size_t untagged = 0;
  std::size_t tagged_in_set = 0;
  std::size_t total = 0;

  bool operator==(const PartitionStats&) const = default;
};

inline PartitionStats partition_stats(const Partition& p)
{
  PartitionStats s;
  for (std::size_t i = 0; i < p.symbols.size(); ++i) {
    s.rows.emplace_back(p.symbols[i], p.buckets[i].size());
    s.tagged_in_set += p.buckets[i].size();
  }
  s.other = p.other.size();
  s.untagged = p.untagged.size();
  s.total = s.tagged_in_set + s.other + s.untagged;
  return s;
}

inline std::string lowercase(std::string_view s)
{
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

/// Two-column count table: one row per tag, then other, untagged, the
/// in-set subtotal and the grand total.
inline void print_stats(std::ostream& out, const PartitionStats& s)
{
  out << "category\tcount\n";
  for (const auto& [sym, n] : s.rows) out << lowercase(sym) << '\t' << n << '\n';
  out << "other\t" << s.other << '\n';
  out << "untagged\t" << s.untagged << '\n';
  out << "tagged\t" << s.tagged_in_set << '\n';
  out << "total\t" << s.total << '\n';
}

// ---------------------------------------------------------------------------
// emission

inline constexpr std::string_view kOtherFile = "other.txt";
inline constexpr std::string_view kUntaggedFile = "untagged.txt";
inline constexpr std::string_view kManifestFile = "manifest.tsv";

inline std::string category_file_name(std::string_view symbol) { return lowercase(symbol) + ".txt"; }

struct ManifestEntry {
  std::filesystem::path path;
  std::size_t count;

  bool operator==(const ManifestEntry&) const = default;
};

using Manifest = std::vector<ManifestEntry>;

/// Writes `<symbol>.txt` for every tag (empty buckets included), plus
/// other.txt (`word<TAB>TAG` lines) and untagged.txt when nonempty. Stale
/// other/untagged files from an earlier run are removed.
inline Manifest emit_partition(const Partition& p, const std::filesystem::path& out_dir)
{
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(out_dir, ec)) throw IoFailure(out_dir.string(), "not a directory");

  std::vector<std::pair<fs::path, const std::vector<std::string>*>> jobs;
  for (std::size_t i = 0; i < p.symbols.size(); ++i)
    jobs.emplace_back(out_dir / category_file_name(p.symbols[i]), &p.buckets[i]);

  std::vector<std::string> other_lines;
  for (const auto& [word, tag] : p.other) other_lines.push_back(word + '\t' + tag);
  if (!other_lines.empty())
    jobs.emplace_back(out_dir / kOtherFile, &other_lines);
  else
    fs::remove(out_dir / kOtherFile, ec);
  if (!p.untagged.empty())
    jobs.emplace_back(out_dir / kUntaggedFile, &p.untagged);
  else
    fs::remove(out_dir / kUntaggedFile, ec);

  // Distinct files; writes are independent.
  std::vector<std::future<std::size_t>> pending;
  pending.reserve(jobs.size());
  for (const auto& job : jobs)
    pending.push_back(std::async(std::launch::async, [&job] { return write_lines(*job.second, job.first); }));

  Manifest manifest;
  std::optional<IoFailure> failure;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    try {
      manifest.push_back({jobs[i].first, pending[i].get()});
    } catch (const IoFailure& e) {
      if (!failure) failure = e;
    }
  }
  if (failure) throw *failure;
  return manifest;
}

inline void write_manifest(const Manifest& manifest, const std::filesystem::path& path)
{
  std::vector<std::string> lines;
  for (const ManifestEntry& e : manifest) lines.push_back(e.path.filename().string() + '\t' + std::to_string(e.count));
  write_lines(lines, path);
}

/// Rebuilds a partition from a directory written by emit_partition.
/// Every tag file must exist; other.txt and untagged.txt are optional.
inline Partition read_partition(const std::filesystem::path& dir, const TagSet& tags = TagSet::gujarati())
{
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw IoFailure(dir.string(), "not a directory");

  Partition p = Partition::empty_for(tags);
  for (std::size_t i = 0; i < p.symbols.size(); ++i) p.buckets[i] = read_lines(dir / category_file_name(p.symbols[i]));

  if (fs::exists(dir / kOtherFile, ec)) {
    std::size_t line_no = 0;
    for (const std::string& line : read_lines(dir / kOtherFile)) {
      ++line_no;
      auto tab = line.find('\t');
      if (tab == std::string::npos || tab == 0)
        throw IoFailure((dir / kOtherFile).string(), "line " + std::to_string(line_no) + ": expected word<TAB>tag");
      p.other.emplace_back(line.substr(0, tab), line.substr(tab + 1));
    }
  }
  if (fs::exists(dir / kUntaggedFile, ec)) p.untagged = read_lines(dir / kUntaggedFile);
  return p;
}

}  // namespace gujclust
