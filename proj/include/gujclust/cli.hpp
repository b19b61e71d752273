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
/// Command dispatch shared by the `gujclust` executable and the tests.

#pragma once

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "gujclust/corpus_io.hpp"
#include "gujclust/errors.hpp"
#include "gujclust/linkage_cluster.hpp"
#include "gujclust/stemmer.hpp"
#include "gujclust/tag_partition.hpp"
#include "gujclust/wx_codec.hpp"

namespace gujclust::cli {

enum class Command { translit, partition, cluster, stem, stats };
enum class Direction { automatic, to_script, to_wx };

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  Command command = Command::stats;
  std::string input;  // empty or "-" means stdin where a stream is accepted
  std::string out;
  CorpusFormat format = CorpusFormat::apostrophe;
  SimilarityMetric metric = SimilarityMetric::lcp;
  Linkage linkage = Linkage::single;
  std::optional<double> cut;
  bool dendrogram = false;
  std::string table;
  std::string inventory;
  ScriptTarget script = ScriptTarget::devanagari;
  Direction direction = Direction::automatic;
};

/// Thrown for a configuration that is missing something the command needs.
class UsageError : public Error {
 public:
  using Error::Error;
};

namespace detail {

inline std::ifstream open_input(const std::string& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure(path, "cannot open for reading");
  return in;
}

template <typename F>
decltype(auto) with_input(const std::string& path, std::istream& std_in, F&& f)
{
  if (path.empty() || path == "-") return f(std_in);
  auto in = open_input(path);
  return f(in);
}

inline bool is_ascii(std::string_view s)
{
  return std::all_of(s.begin(), s.end(), [](char c) { return static_cast<unsigned char>(c) < 0x80; });
}

inline void run_translit(const RunConfig& cfg, std::istream& std_in, std::ostream& out)
{
  WxTable table = [&] {
    if (cfg.table.empty()) return WxTable::builtin(cfg.script);
    auto in = open_input(cfg.table);
    try {
      return load_wx_table(in);
    } catch (const LineError& e) {
      throw IoFailure(cfg.table, e.what());
    }
  }();
  WxCodec codec(std::move(table), cfg.script);

  with_input(cfg.input, std_in, [&](std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      std::string converted;
      std::size_t i = 0;
      while (i < line.size()) {
        std::size_t j = i;
        if (gujclust::detail::is_space(line[i])) {
          while (j < line.size() && gujclust::detail::is_space(line[j])) ++j;
          converted.append(line, i, j - i);
        } else {
          while (j < line.size() && !gujclust::detail::is_space(line[j])) ++j;
          std::string_view word(line.data() + i, j - i);
          bool to_script = cfg.direction == Direction::to_script ||
                           (cfg.direction == Direction::automatic && is_ascii(word));
          try {
            converted += to_script ? codec.to_script(word) : codec.to_wx(word);
          } catch (const Error& e) {
            throw LineError(line_no, "word '" + std::string(word) + "': " + e.what());
          }
        }
        i = j;
      }
      out << converted << '\n';
    }
  });
}

inline void run_partition(const RunConfig& cfg, std::ostream& out)
{
  if (cfg.input.empty()) throw UsageError("partition: an input corpus is required");
  if (cfg.out.empty()) throw UsageError("partition: --out is required");
  TaggedCorpus corpus = parse_corpus_file(cfg.input, cfg.format);
  Partition p = partition(corpus);

  std::filesystem::path dir(cfg.out);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  Manifest manifest = emit_partition(p, dir);
  write_manifest(manifest, dir / kManifestFile);
  print_stats(out, partition_stats(p));
}

inline void run_stats(const RunConfig& cfg, std::ostream& out)
{
  if (cfg.input.empty()) throw UsageError("stats: a partition directory is required");
  print_stats(out, partition_stats(read_partition(cfg.input)));
}

inline void run_cluster(const RunConfig& cfg, std::istream& std_in, std::ostream& out)
{
  std::vector<std::string> words = with_input(cfg.input, std_in, [](std::istream& in) {
    std::vector<std::string> w;
    std::string tok;
    while (in >> tok) w.push_back(tok);
    return w;
  });
  SimilarityMatrix m = similarity_matrix(words, cfg.metric);
  ClusterResult r = cluster(m, cfg.linkage, cfg.cut);
  if (r.flat) write_flat_clusters(out, *r.flat, m.items());
  if (cfg.dendrogram || !r.flat) write_dendrogram(out, r.dendrogram);
}

inline void run_stem(const RunConfig& cfg, std::ostream& out)
{
  if (cfg.input.empty()) throw UsageError("stem: a partition directory or tagged file is required");
  SuffixInventory inv = [&] {
    if (cfg.inventory.empty()) return SuffixInventory::seed();
    auto in = open_input(cfg.inventory);
    try {
      return SuffixInventory::load(in);
    } catch (const LineError& e) {
      throw IoFailure(cfg.inventory, e.what());
    }
  }();

  Partition p = std::filesystem::is_directory(cfg.input) ? read_partition(cfg.input)
                                                         : partition(parse_corpus_file(cfg.input, cfg.format));
  auto results = stem_partition(p, inv);
  if (cfg.out.empty()) {
    write_stem_results(out, results);
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary | std::ios::trunc);
  if (!file) throw IoFailure(cfg.out, "cannot open for writing");
  write_stem_results(file, results);
  if (!file.flush()) throw IoFailure(cfg.out, "write failed");
}

}  // namespace detail

/// Runs one command. Reports go to @p out, diagnostics to @p err.
inline int run(const RunConfig& cfg, std::istream& in = std::cin, std::ostream& out = std::cout,
               std::ostream& err = std::cerr)
{
  try {
    switch (cfg.command) {
      case Command::translit: detail::run_translit(cfg, in, out); break;
      case Command::partition: detail::run_partition(cfg, out); break;
      case Command::cluster: detail::run_cluster(cfg, in, out); break;
      case Command::stem: detail::run_stem(cfg, out); break;
      case Command::stats: detail::run_stats(cfg, out); break;
    }
  } catch (const UsageError& e) {
    err << "gujclust: " << e.what() << '\n';
    return kExitUsage;
  } catch (const LineError& e) {
    err << "gujclust: " << (cfg.input.empty() ? std::string("<stdin>") : cfg.input) << ": " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "gujclust: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace gujclust::cli
