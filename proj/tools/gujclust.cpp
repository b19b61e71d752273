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

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "gujclust/cli.hpp"

using namespace gujclust;

int main(int argc, char** argv)
{
  cli::RunConfig cfg;
  CLI::App app{"gujclust: tagged-corpus partitioning, word clustering, stemming and WX transliteration"};
  app.require_subcommand(1);

  const std::map<std::string, CorpusFormat> formats{{"apostrophe", CorpusFormat::apostrophe},
                                                    {"tab", CorpusFormat::tab}};
  const std::map<std::string, SimilarityMetric> metrics{{"lcp", SimilarityMetric::lcp},
                                                        {"levenshtein", SimilarityMetric::levenshtein}};
  const std::map<std::string, Linkage> linkages{
    {"single", Linkage::single}, {"complete", Linkage::complete}, {"average", Linkage::average}};
  const std::map<std::string, ScriptTarget> scripts{{"devanagari", ScriptTarget::devanagari},
                                                    {"gujarati", ScriptTarget::gujarati}};
  const std::map<std::string, cli::Direction> directions{{"auto", cli::Direction::automatic},
                                                         {"to-script", cli::Direction::to_script},
                                                         {"to-wx", cli::Direction::to_wx}};

  auto* translit = app.add_subcommand("translit", "Convert words between WX and Indic script");
  translit->add_option("input", cfg.input, "Input file (default: stdin)");
  translit->add_option("--table", cfg.table, "WX table document");
  translit->add_option("--script", cfg.script, "Output script")->transform(CLI::CheckedTransformer(scripts));
  translit->add_option("--direction", cfg.direction, "auto picks per word: ASCII goes to script")
    ->transform(CLI::CheckedTransformer(directions));

  auto* part = app.add_subcommand("partition", "Split a tagged corpus into one word file per tag");
  part->add_option("input", cfg.input, "Tagged corpus")->required();
  part->add_option("--out", cfg.out, "Output directory")->required();
  part->add_option("--format", cfg.format, "Corpus layout")->transform(CLI::CheckedTransformer(formats));

  double cut = 0.0;
  auto* clus = app.add_subcommand("cluster", "Agglomerative clustering of a word list");
  clus->add_option("input", cfg.input, "Whitespace-separated words (default: stdin)");
  clus->add_option("--metric", cfg.metric, "Word similarity")->transform(CLI::CheckedTransformer(metrics));
  clus->add_option("--linkage", cfg.linkage, "Linkage criterion")->transform(CLI::CheckedTransformer(linkages));
  auto* cut_opt = clus->add_option("--cut", cut, "Stop before merges below this similarity")
                    ->check(CLI::Range(0.0, 1.0));
  clus->add_flag("--dendrogram", cfg.dendrogram, "Also print the merge table");

  auto* stem = app.add_subcommand("stem", "Strip suffixes from a partition directory or tagged file");
  stem->add_option("input", cfg.input, "Partition directory or tagged corpus")->required();
  stem->add_option("--inventory", cfg.inventory, "Suffix inventory document");
  stem->add_option("--format", cfg.format, "Corpus layout for file input")
    ->transform(CLI::CheckedTransformer(formats));
  stem->add_option("--out", cfg.out, "Output file (default: stdout)");

  auto* stats = app.add_subcommand("stats", "Print the count table of a partition directory");
  stats->add_option("input", cfg.input, "Partition directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kExitUsage;
  }

  if (*translit) cfg.command = cli::Command::translit;
  if (*part) cfg.command = cli::Command::partition;
  if (*clus) cfg.command = cli::Command::cluster;
  if (*stem) cfg.command = cli::Command::stem;
  if (*stats) cfg.command = cli::Command::stats;
  if (cut_opt->count() > 0) cfg.cut = cut;

  std::ios::sync_with_stdio(false);
  return cli::run(cfg);
}
