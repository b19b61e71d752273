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
/// Agglomerative hierarchical clustering of words over a similarity matrix.
///
/// Similarities live in [0,1] with 1 on the diagonal. Between two clusters
/// the similarity is the maximum (single), minimum (complete) or unweighted
/// mean (average) over all cross pairs. At every step the most similar pair
/// of live clusters is merged; among equal similarities the lexicographically
/// smallest (id, id) pair wins. Leaves carry ids 0..n-1 and the k-th merge
/// creates id n+k.

#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "gujclust/errors.hpp"
#include "gujclust/utf8.hpp"

namespace gujclust {

enum class SimilarityMetric { lcp, levenshtein };
enum class Linkage { single, complete, average };

/// Symmetric n x n similarity matrix with optional item labels.
class SimilarityMatrix {
 public:
  /// @p values is row-major n*n. Throws MalformedMatrix unless the matrix
  /// is symmetric, has a unit diagonal and every entry is in [0,1].
  static SimilarityMatrix from_values(std::size_t n, std::vector<double> values, std::vector<std::string> items = {})
  {
    if (n == 0) throw EmptyInput("similarity matrix has no items");
    if (values.size() != n * n) throw MalformedMatrix("expected " + std::to_string(n * n) + " values");
    if (!items.empty() && items.size() != n) throw MalformedMatrix("item count does not match matrix size");
    for (std::size_t i = 0; i < n; ++i) {
      if (values[i * n + i] != 1.0) throw MalformedMatrix("diagonal entry " + std::to_string(i) + " is not 1");
      for (std::size_t j = 0; j < n; ++j) {
        double v = values[i * n + j];
        if (!(v >= 0.0 && v <= 1.0))
          throw MalformedMatrix("entry (" + std::to_string(i) + "," + std::to_string(j) + ") outside [0,1]");
        if (v != values[j * n + i])
          throw MalformedMatrix("asymmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
    SimilarityMatrix m;
    m.n_ = n;
    m.values_ = std::move(values);
    m.items_ = std::move(items);
    return m;
  }

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return values_[i * n_ + j]; }
  std::span<const double> values() const noexcept { return values_; }
  const std::vector<std::string>& items() const noexcept { return items_; }

  bool operator==(const SimilarityMatrix&) const = default;

 private:
  SimilarityMatrix() = default;

  std::size_t n_ = 0;
  std::vector<double> values_;
  std::vector<std::string> items_;
};

// ---------------------------------------------------------------------------
// word similarities

namespace detail {

inline std::u32string codepoints(std::string_view s)
{
  if (auto cps = utf8::decode(s)) return *cps;
  return std::u32string(s.begin(), s.end());
}

}  // namespace detail

/// Levenshtein distance with unit costs.
inline std::size_t edit_distance(std::u32string_view a, std::u32string_view b)
{
  if (a.size() < b.size()) std::swap(a, b);
  std::vector<std::size_t> row(b.size() + 1);
  std::iota(row.begin(), row.end(), std::size_t{0});
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      std::size_t up = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

/// |common prefix| / max(|a|,|b|), counted in codepoints.
inline double lcp_similarity(std::string_view a, std::string_view b)
{
  auto ca = detail::codepoints(a), cb = detail::codepoints(b);
  std::size_t longest = std::max(ca.size(), cb.size());
  if (longest == 0) return 1.0;
  auto [ia, ib] = std::mismatch(ca.begin(), ca.end(), cb.begin(), cb.end());
  return static_cast<double>(ia - ca.begin()) / static_cast<double>(longest);
}

/// 1 - edit distance / max(|a|,|b|), counted in codepoints.
inline double levenshtein_similarity(std::string_view a, std::string_view b)
{
  auto ca = detail::codepoints(a), cb = detail::codepoints(b);
  std::size_t longest = std::max(ca.size(), cb.size());
  if (longest == 0) return 1.0;
  return 1.0 - static_cast<double>(edit_distance(ca, cb)) / static_cast<double>(longest);
}

inline double word_similarity(std::string_view a, std::string_view b, SimilarityMetric metric)
{
  return metric == SimilarityMetric::lcp ? lcp_similarity(a, b) : levenshtein_similarity(a, b);
}

/// Pairwise similarity of @p words. Rows are split across @p threads
/// (0 = hardware concurrency); each cell is computed independently, so the
/// result does not depend on the thread count.
inline SimilarityMatrix similarity_matrix(std::span<const std::string> words,
                                          SimilarityMetric metric = SimilarityMetric::lcp,
                                          unsigned threads = 0)
{
  const std::size_t n = words.size();
  if (n == 0) throw EmptyInput();
  for (std::size_t i = 0; i < n; ++i)
    if (words[i].empty()) throw EmptyInput("empty word at index " + std::to_string(i));

  std::vector<double> values(n * n, 0.0);
  auto fill_rows = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = first; i < n; i += stride) {
      values[i * n + i] = 1.0;
      for (std::size_t j = i + 1; j < n; ++j) values[i * n + j] = word_similarity(words[i], words[j], metric);
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  if (n < 64) threads = 1;
  if (threads == 1) {
    fill_rows(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(fill_rows, t, threads);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) values[i * n + j] = values[j * n + i];

  return SimilarityMatrix::from_values(n, std::move(values), std::vector<std::string>(words.begin(), words.end()));
}

// ---------------------------------------------------------------------------
// clustering

struct Merge {
  std::size_t a;  // smaller id
  std::size_t b;
  double similarity;
  std::size_t id;  // id of the new cluster

  bool operator==(const Merge&) const = default;
};

struct Dendrogram {
  std::size_t leaves = 0;
  std::vector<Merge> merges;

  bool operator==(const Dendrogram&) const = default;
};

/// Flat clusters as sorted leaf indices, ordered by smallest member.
using FlatClusters = std::vector<std::vector<std::size_t>>;

struct ClusterResult {
  Dendrogram dendrogram;
  std::optional<FlatClusters> flat;  // set when a cut was requested
};

enum class ClusterStrategy {
  rescan,            // full O(n^2) scan of live pairs per merge
  cached_neighbors,  // per-cluster best partner cache; identical output
};

namespace detail {

// Live clusters occupy slots; a merged cluster reuses the slot of its
// smaller-id parent. `link` holds the similarity (single/complete) or the
// sum of cross-pair similarities (average).
class LinkageState {
 public:
  LinkageState(const SimilarityMatrix& m, Linkage linkage)
    : n_(m.size()), linkage_(linkage), link_(m.values().begin(), m.values().end()), ids_(n_), sizes_(n_, 1),
      live_(n_, true)
  {
    std::iota(ids_.begin(), ids_.end(), std::size_t{0});
  }

  std::size_t slots() const noexcept { return n_; }
  bool live(std::size_t s) const { return live_[s]; }
  std::size_t id(std::size_t s) const { return ids_[s]; }

  double similarity(std::size_t x, std::size_t y) const
  {
    double v = link_[x * n_ + y];
    if (linkage_ == Linkage::average) v /= static_cast<double>(sizes_[x] * sizes_[y]);
    return v;
  }

  /// Merges slot @p y into slot @p x and assigns @p new_id.
  void merge(std::size_t x, std::size_t y, std::size_t new_id)
  {
    for (std::size_t z = 0; z < n_; ++z) {
      if (!live_[z] || z == x || z == y) continue;
      double& xz = link_[x * n_ + z];
      double yz = link_[y * n_ + z];
      switch (linkage_) {
        case Linkage::single: xz = std::max(xz, yz); break;
        case Linkage::complete: xz = std::min(xz, yz); break;
        case Linkage::average: xz += yz; break;
      }
      link_[z * n_ + x] = xz;
    }
    sizes_[x] += sizes_[y];
    live_[y] = false;
    ids_[x] = new_id;
  }

 private:
  std::size_t n_;
  Linkage linkage_;
  std::vector<double> link_;
  std::vector<std::size_t> ids_;
  std::vector<std::size_t> sizes_;
  std::vector<bool> live_;
};

// True when (s, a, b) beats (best_s, best_a, best_b): higher similarity,
// then smaller id pair.
inline bool better(double s, std::size_t a, std::size_t b, double best_s, std::size_t best_a, std::size_t best_b)
{
  if (s != best_s) return s > best_s;
  return a != best_a ? a < best_a : b < best_b;
}

inline Merge record(const LinkageState& st, std::size_t x, std::size_t y, double s, std::size_t new_id)
{
  std::size_t a = st.id(x), b = st.id(y);
  return {std::min(a, b), std::max(a, b), s, new_id};
}

inline Dendrogram cluster_rescan(const SimilarityMatrix& m, Linkage linkage)
{
  const std::size_t n = m.size();
  LinkageState st(m, linkage);
  Dendrogram d{n, {}};
  for (std::size_t step = 0; step + 1 < n; ++step) {
    std::size_t bx = 0, by = 0;
    double bs = -1.0;
    std::size_t ba = std::numeric_limits<std::size_t>::max(), bb = ba;
    for (std::size_t x = 0; x < n; ++x) {
      if (!st.live(x)) continue;
      for (std::size_t y = 0; y < n; ++y) {
        if (!st.live(y) || st.id(y) <= st.id(x)) continue;
        double s = st.similarity(x, y);
        if (better(s, st.id(x), st.id(y), bs, ba, bb)) {
          bs = s, ba = st.id(x), bb = st.id(y), bx = x, by = y;
        }
      }
    }
    std::size_t new_id = n + step;
    d.merges.push_back(record(st, bx, by, bs, new_id));
    st.merge(std::min(bx, by), std::max(bx, by), new_id);
  }
  return d;
}

inline Dendrogram cluster_cached(const SimilarityMatrix& m, Linkage linkage)
{
  const std::size_t n = m.size();
  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  LinkageState st(m, linkage);

  // best_[x]: slot of the most similar live cluster with a larger id.
  std::vector<std::size_t> best(n, none);
  std::vector<double> best_sim(n, -1.0);
  auto rescan_row = [&](std::size_t x) {
    best[x] = none;
    best_sim[x] = -1.0;
    for (std::size_t y = 0; y < n; ++y) {
      if (!st.live(y) || st.id(y) <= st.id(x)) continue;
      double s = st.similarity(x, y);
      if (best[x] == none || better(s, st.id(x), st.id(y), best_sim[x], st.id(x), st.id(best[x]))) {
        best[x] = y;
        best_sim[x] = s;
      }
    }
  };
  for (std::size_t x = 0; x < n; ++x) rescan_row(x);

  Dendrogram d{n, {}};
  for (std::size_t step = 0; step + 1 < n; ++step) {
    std::size_t bx = none;
    for (std::size_t x = 0; x < n; ++x) {
      if (!st.live(x) || best[x] == none) continue;
      if (bx == none || better(best_sim[x], st.id(x), st.id(best[x]), best_sim[bx], st.id(bx), st.id(best[bx])))
        bx = x;
    }
    std::size_t by = best[bx];
    std::size_t new_id = n + step;
    d.merges.push_back(record(st, bx, by, best_sim[bx], new_id));

    std::size_t keep = std::min(bx, by), gone = std::max(bx, by);
    st.merge(keep, gone, new_id);
    // The merged cluster has the largest id, so it has no partner in its own row.
    best[keep] = none;
    best[gone] = none;
    for (std::size_t x = 0; x < n; ++x) {
      if (!st.live(x) || x == keep) continue;
      if (best[x] == keep || best[x] == gone) {
        rescan_row(x);
      } else {
        double s = st.similarity(x, keep);
        if (best[x] == none || s > best_sim[x]) {
          best[x] = keep;
          best_sim[x] = s;
        }
      }
    }
  }
  return d;
}

}  // namespace detail

/// Cuts @p d at @p threshold: merges are replayed in order until the first
/// one below the threshold.
inline FlatClusters flat_clusters(const Dendrogram& d, double threshold)
{
  const std::size_t n = d.leaves;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  // representative leaf of every cluster id
  std::vector<std::size_t> rep(n + d.merges.size());
  std::iota(rep.begin(), rep.begin() + static_cast<std::ptrdiff_t>(n), std::size_t{0});
  for (const Merge& mg : d.merges) {
    if (mg.similarity < threshold) break;
    std::size_t ra = find(rep[mg.a]), rb = find(rep[mg.b]);
    parent[std::max(ra, rb)] = std::min(ra, rb);
    rep[mg.id] = std::min(ra, rb);
  }

  FlatClusters out;
  std::vector<std::size_t> slot(n, std::numeric_limits<std::size_t>::max());
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = find(i);
    if (slot[r] == std::numeric_limits<std::size_t>::max()) {
      slot[r] = out.size();
      out.emplace_back();
    }
    out[slot[r]].push_back(i);
  }
  return out;
}

inline ClusterResult cluster(const SimilarityMatrix& m, Linkage linkage, std::optional<double> cut = std::nullopt,
                             ClusterStrategy strategy = ClusterStrategy::cached_neighbors)
{
  if (cut && !(*cut >= 0.0 && *cut <= 1.0)) throw Error("cut threshold must lie in [0,1]");
  ClusterResult r;
  r.dendrogram = strategy == ClusterStrategy::rescan ? detail::cluster_rescan(m, linkage)
                                                     : detail::cluster_cached(m, linkage);
  if (cut) r.flat = flat_clusters(r.dendrogram, *cut);
  return r;
}

// ---------------------------------------------------------------------------
// text output

inline std::string format_similarity(double v)
{
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

/// One cluster per line, members separated by a space. Members are printed
/// as item labels when @p items is nonempty, else as indices.
inline void write_flat_clusters(std::ostream& out, const FlatClusters& clusters,
                                std::span<const std::string> items = {})
{
  for (const auto& c : clusters) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) out << ' ';
      if (items.empty())
        out << c[k];
      else
        out << items[c[k]];
    }
    out << '\n';
  }
}

/// Four columns: a, b, similarity, new id.
inline void write_dendrogram(std::ostream& out, const Dendrogram& d)
{
  for (const Merge& m : d.merges)
    out << m.a << '\t' << m.b << '\t' << format_similarity(m.similarity) << '\t' << m.id << '\n';
}

}  // namespace gujclust
