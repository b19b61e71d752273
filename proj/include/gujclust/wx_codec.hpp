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
/// WX notation <-> Devanagari / Gujarati transliteration.
///
/// A table maps ASCII WX keys to script codepoint sequences. Keys come in
/// four classes: independent vowels ("a", "aA", ...), dependent vowel signs
/// ("A", "i", ...), consonants and the nasal/visarga modifiers. Scanning is
/// greedy longest-match in both directions. A vowel-sign key directly after
/// a consonant yields the sign; anywhere else it yields the independent
/// vowel "a"+key. After a consonant, "a" is the inherent vowel and emits
/// nothing, so "ka" and "k" both give the bare consonant. No virama is ever
/// inserted, so "kk" is two full consonants.

#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "gujclust/errors.hpp"
#include "gujclust/utf8.hpp"

namespace gujclust {

enum class KeyClass { vowel, matra, consonant, modifier };

inline std::string_view to_string(KeyClass c)
{
  switch (c) {
    case KeyClass::vowel: return "vowel";
    case KeyClass::matra: return "matra";
    case KeyClass::consonant: return "consonant";
    case KeyClass::modifier: return "modifier";
  }
  return "?";
}

enum class ScriptTarget { devanagari, gujarati };

struct WxEntry {
  std::string key;
  std::u32string value;
  KeyClass cls;

  bool operator==(const WxEntry&) const = default;
};

namespace detail {

// Devanagari reference table. Rows up to "c C j J F" are the published WX
// inventory; lines below the "extension" marker complete the standard WX
// consonant set and the vocalic-r signs.
inline constexpr std::string_view kDevanagariTableDocument =
  "# WX -> Devanagari\n"
  "# <wx-key>\t<script>\t<class>\n"
  "a\tअ\tvowel\n"
  "aA\tआ\tvowel\n"
  "ai\tइ\tvowel\n"
  "aI\tई\tvowel\n"
  "au\tउ\tvowel\n"
  "aU\tऊ\tvowel\n"
  "aeV\tऎ\tvowel\n"
  "ae\tए\tvowel\n"
  "aE\tऐ\tvowel\n"
  "aEY\tऍ\tvowel\n"
  "aoV\tऒ\tvowel\n"
  "ao\tओ\tvowel\n"
  "aO\tऔ\tvowel\n"
  "aOY\tऑ\tvowel\n"
  "aM\tअं\tvowel\n"
  "aH\tअः\tvowel\n"
  "az\tअँ\tvowel\n"
  "aq\tऋ\tvowel\n"
  "aQ\tॠ\tvowel\n"
  "A\tा\tmatra\n"
  "i\tि\tmatra\n"
  "I\tी\tmatra\n"
  "u\tु\tmatra\n"
  "U\tू\tmatra\n"
  "eV\tॆ\tmatra\n"
  "e\tे\tmatra\n"
  "E\tै\tmatra\n"
  "EY\tॅ\tmatra\n"
  "oV\tॊ\tmatra\n"
  "o\tो\tmatra\n"
  "O\tौ\tmatra\n"
  "OY\tॉ\tmatra\n"
  "M\tं\tmodifier\n"
  "H\tः\tmodifier\n"
  "z\tँ\tmodifier\n"
  "k\tक\tconsonant\n"
  "K\tख\tconsonant\n"
  "g\tग\tconsonant\n"
  "G\tघ\tconsonant\n"
  "f\tङ\tconsonant\n"
  "c\tच\tconsonant\n"
  "C\tछ\tconsonant\n"
  "j\tज\tconsonant\n"
  "J\tझ\tconsonant\n"
  "F\tञ\tconsonant\n"
  "# extension: standard WX entries beyond the published rows\n"
  "q\tृ\tmatra\n"
  "Q\tॄ\tmatra\n"
  "t\tट\tconsonant\n"
  "T\tठ\tconsonant\n"
  "d\tड\tconsonant\n"
  "D\tढ\tconsonant\n"
  "N\tण\tconsonant\n"
  "w\tत\tconsonant\n"
  "W\tथ\tconsonant\n"
  "x\tद\tconsonant\n"
  "X\tध\tconsonant\n"
  "n\tन\tconsonant\n"
  "p\tप\tconsonant\n"
  "P\tफ\tconsonant\n"
  "b\tब\tconsonant\n"
  "B\tभ\tconsonant\n"
  "m\tम\tconsonant\n"
  "y\tय\tconsonant\n"
  "r\tर\tconsonant\n"
  "l\tल\tconsonant\n"
  "lY\tळ\tconsonant\n"
  "v\tव\tconsonant\n"
  "S\tश\tconsonant\n"
  "R\tष\tconsonant\n"
  "s\tस\tconsonant\n"
  "h\tह\tconsonant\n";

// Assigned codepoints of the Gujarati block (Unicode 15).
inline bool gujarati_assigned(char32_t cp)
{
  struct Range {
    char32_t lo, hi;
  };
  static constexpr Range ranges[] = {
    {0x0A81, 0x0A83}, {0x0A85, 0x0A8D}, {0x0A8F, 0x0A91}, {0x0A93, 0x0AA8}, {0x0AAA, 0x0AB0},
    {0x0AB2, 0x0AB3}, {0x0AB5, 0x0AB9}, {0x0ABC, 0x0AC5}, {0x0AC7, 0x0AC9}, {0x0ACB, 0x0ACD},
    {0x0AD0, 0x0AD0}, {0x0AE0, 0x0AE3}, {0x0AE6, 0x0AF1}, {0x0AF9, 0x0AFF},
  };
  return std::any_of(std::begin(ranges), std::end(ranges),
                     [cp](Range r) { return cp >= r.lo && cp <= r.hi; });
}

inline std::string_view trim_cr(std::string_view s)
{
  if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
  return s;
}

}  // namespace detail

/// Immutable, validated WX mapping table.
class WxTable {
 public:
  /// Validates and indexes @p entries. @p lines gives the source line of
  /// each entry for diagnostics (may be empty).
  static WxTable from_entries(std::vector<WxEntry> entries, std::vector<std::size_t> lines = {})
  {
    if (lines.size() != entries.size()) {
      lines.resize(entries.size());
      for (std::size_t i = 0; i < lines.size(); ++i) lines[i] = i + 1;
    }
    if (entries.empty()) throw MalformedRow(1, "table has no mapping rows");

    WxTable t;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const WxEntry& e = entries[i];
      if (e.key.empty()) throw MalformedRow(lines[i], "empty WX key");
      for (char ch : e.key)
        if (static_cast<unsigned char>(ch) >= 0x80 || ch <= ' ')
          throw MalformedRow(lines[i], "WX key must be printable ASCII");
      if (e.value.empty()) throw MalformedRow(lines[i], "empty script value");
      if (!t.by_key_.emplace(e.key, i).second) throw DuplicateKey(e.key);
      if (!t.by_value_.emplace(e.value, i).second)
        throw MalformedRow(lines[i], "script value already mapped");
      t.max_key_len_ = std::max(t.max_key_len_, e.key.size());
      t.max_value_len_ = std::max(t.max_value_len_, e.value.size());
    }
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (entries[i].cls != KeyClass::matra) continue;
      auto it = t.by_key_.find("a" + entries[i].key);
      if (it == t.by_key_.end() || entries[it->second].cls != KeyClass::vowel)
        throw MalformedRow(lines[i], "matra '" + entries[i].key + "' has no independent vowel 'a" +
                                       entries[i].key + "'");
    }
    t.entries_ = std::move(entries);
    return t;
  }

  static const WxTable& devanagari()
  {
    static const WxTable table = [] {
      std::istringstream in{std::string(detail::kDevanagariTableDocument)};
      return load(in);
    }();
    return table;
  }

  /// Gujarati table obtained by shifting every Devanagari codepoint by the
  /// block offset; rows that hit an unassigned Gujarati codepoint are dropped.
  static const WxTable& gujarati()
  {
    static const WxTable table = derive_gujarati(devanagari());
    return table;
  }

  static const WxTable& builtin(ScriptTarget target)
  {
    return target == ScriptTarget::gujarati ? gujarati() : devanagari();
  }

  static WxTable derive_gujarati(const WxTable& deva)
  {
    std::vector<WxEntry> out;
    for (const WxEntry& e : deva.entries()) {
      WxEntry g{e.key, {}, e.cls};
      bool ok = true;
      for (char32_t cp : e.value) {
        if (cp < 0x0900 || cp > 0x097F) {
          ok = false;
          break;
        }
        char32_t shifted = cp + 0x180;
        if (!detail::gujarati_assigned(shifted)) {
          ok = false;
          break;
        }
        g.value.push_back(shifted);
      }
      if (ok) out.push_back(std::move(g));
    }
    // A matra kept while its independent vowel was dropped (or vice versa)
    // would fail validation; keep only complete families.
    auto has = [&](const std::string& key, KeyClass cls) {
      return std::any_of(out.begin(), out.end(), [&](const WxEntry& e) { return e.key == key && e.cls == cls; });
    };
    std::erase_if(out, [&](const WxEntry& e) { return e.cls == KeyClass::matra && !has("a" + e.key, KeyClass::vowel); });
    return from_entries(std::move(out));
  }

  /// Parses a table document: `<wx-key>\t<script>\t<class>` per line,
  /// `#` comment lines and blank lines ignored.
  static WxTable load(std::istream& in)
  {
    std::vector<WxEntry> entries;
    std::vector<std::size_t> lines;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
      ++line_no;
      std::string_view line = detail::trim_cr(raw);
      if (line.empty() || line.front() == '#') continue;

      std::vector<std::string_view> fields;
      std::size_t start = 0;
      for (;;) {
        auto tab = line.find('\t', start);
        fields.push_back(line.substr(start, tab == std::string_view::npos ? std::string_view::npos : tab - start));
        if (tab == std::string_view::npos) break;
        start = tab + 1;
      }
      if (fields.size() != 3) throw MalformedRow(line_no, "expected 3 tab-separated fields");

      KeyClass cls;
      if (fields[2] == "vowel")
        cls = KeyClass::vowel;
      else if (fields[2] == "matra")
        cls = KeyClass::matra;
      else if (fields[2] == "consonant")
        cls = KeyClass::consonant;
      else if (fields[2] == "modifier")
        cls = KeyClass::modifier;
      else
        throw MalformedRow(line_no, "unknown class '" + std::string(fields[2]) + "'");

      auto value = utf8::decode(fields[1]);
      if (!value) throw MalformedRow(line_no, "script value is not valid UTF-8");
      entries.push_back({std::string(fields[0]), std::move(*value), cls});
      lines.push_back(line_no);
    }
    if (entries.empty()) throw MalformedRow(line_no == 0 ? 1 : line_no, "table has no mapping rows");
    return from_entries(std::move(entries), std::move(lines));
  }

  std::span<const WxEntry> entries() const noexcept { return entries_; }

  std::vector<WxEntry> entries_of(KeyClass cls) const
  {
    std::vector<WxEntry> out;
    std::copy_if(entries_.begin(), entries_.end(), std::back_inserter(out),
                 [cls](const WxEntry& e) { return e.cls == cls; });
    return out;
  }

  const WxEntry* find_key(std::string_view key) const
  {
    auto it = by_key_.find(key);
    return it == by_key_.end() ? nullptr : &entries_[it->second];
  }

  /// Longest key that is a prefix of @p s.
  const WxEntry* longest_key_prefix(std::string_view s) const
  {
    for (std::size_t len = std::min(max_key_len_, s.size()); len > 0; --len)
      if (auto* e = find_key(s.substr(0, len))) return e;
    return nullptr;
  }

  /// Longest script value that is a prefix of @p s.
  const WxEntry* longest_value_prefix(std::u32string_view s) const
  {
    for (std::size_t len = std::min(max_value_len_, s.size()); len > 0; --len) {
      auto it = by_value_.find(s.substr(0, len));
      if (it != by_value_.end()) return &entries_[it->second];
    }
    return nullptr;
  }

  /// Serializes back to the table document format.
  std::string to_document() const
  {
    std::string out;
    for (const WxEntry& e : entries_) {
      out += e.key;
      out += '\t';
      out += utf8::encode(e.value);
      out += '\t';
      out += to_string(e.cls);
      out += '\n';
    }
    return out;
  }

 private:
  WxTable() = default;

  std::vector<WxEntry> entries_;
  std::map<std::string, std::size_t, std::less<>> by_key_;
  std::map<std::u32string, std::size_t, std::less<>> by_value_;
  std::size_t max_key_len_ = 0;
  std::size_t max_value_len_ = 0;
};

inline WxTable load_wx_table(std::istream& in) { return WxTable::load(in); }

inline std::string wx_to_script(std::string_view wx, const WxTable& table)
{
  std::u32string out;
  bool after_consonant = false;
  std::size_t pos = 0;
  while (pos < wx.size()) {
    const WxEntry* e = table.longest_key_prefix(wx.substr(pos));
    if (e == nullptr) throw UnknownWxSequence(pos);
    if (e->cls == KeyClass::matra && !after_consonant) {
      // vowel sign with nothing to attach to: use the independent letter
      const WxEntry* indep = table.find_key("a" + e->key);
      if (indep == nullptr) throw UnknownWxSequence(pos);
      out += indep->value;
    } else if (e->cls == KeyClass::vowel && after_consonant && e->key.front() == 'a') {
      // inherent vowel: "ka" is the bare consonant, "kaM" the consonant plus sign
      if (e->key.size() > 1) {
        const WxEntry* mod = table.find_key(std::string_view(e->key).substr(1));
        out += mod != nullptr && mod->cls == KeyClass::modifier ? mod->value : e->value;
      }
    } else {
      out += e->value;
    }
    after_consonant = e->cls == KeyClass::consonant;
    pos += e->key.size();
  }
  return utf8::encode(out);
}

inline std::string script_to_wx(std::string_view script, const WxTable& table)
{
  std::u32string cps;
  for (std::size_t i = 0; i < script.size();) {
    auto cp = utf8::next(script, i);
    if (!cp) throw UnknownScriptChar(cps.size(), 0xFFFD);
    cps.push_back(*cp);
  }
  std::u32string_view rest = cps;
  std::string out;
  std::size_t pos = 0;
  while (pos < rest.size()) {
    const WxEntry* e = table.longest_value_prefix(rest.substr(pos));
    if (e == nullptr) throw UnknownScriptChar(pos, rest[pos]);
    out += e->key;
    pos += e->value.size();
  }
  return out;
}

/// A table bound to one output script.
class WxCodec {
 public:
  explicit WxCodec(ScriptTarget target = ScriptTarget::devanagari)
    : table_(WxTable::builtin(target)), target_(target)
  {
  }
  WxCodec(WxTable table, ScriptTarget target) : table_(std::move(table)), target_(target) {}

  std::string to_script(std::string_view wx) const { return wx_to_script(wx, table_); }
  std::string to_wx(std::string_view script) const { return script_to_wx(script, table_); }

  const WxTable& table() const noexcept { return table_; }
  ScriptTarget target() const noexcept { return target_; }

 private:
  WxTable table_;
  ScriptTarget target_;
};

}  // namespace gujclust
