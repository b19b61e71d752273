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

// Random WX words drawn from the composition grammar
//   word := unit+
//   unit := vowel [modifier] | consonant [matra] [modifier]
// A vowel unit directly after a bare consonant never starts with the
// inherent "a" alone (a, aM, aH, az), since those spell the consonant
// itself plus an optional sign.

#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "gujclust/wx_codec.hpp"

namespace gujclust::testing {

class WxWordGenerator {
 public:
  explicit WxWordGenerator(const WxTable& table)
    : vowels_(keys(table, KeyClass::vowel)),
      matras_(keys(table, KeyClass::matra)),
      consonants_(keys(table, KeyClass::consonant)),
      modifiers_(keys(table, KeyClass::modifier))
  {
  }

  std::string operator()(std::mt19937_64& rng, std::size_t max_units = 6) const
  {
    std::uniform_int_distribution<std::size_t> units(1, max_units);
    std::bernoulli_distribution coin(0.5), rare(0.15);
    std::string out;
    bool bare_consonant = false;
    for (std::size_t u = units(rng); u > 0; --u) {
      bool decorated = false;
      if (rare(rng) || consonants_.empty()) {
        std::string v;
        do {
          v = pick(vowels_, rng);
        } while (bare_consonant && inherent(v));
        out += v;
        bare_consonant = false;
      } else {
        out += pick(consonants_, rng);
        bare_consonant = true;
        if (coin(rng)) {
          out += pick(matras_, rng);
          decorated = true;
        }
      }
      if (rare(rng)) {
        out += pick(modifiers_, rng);
        decorated = true;
      }
      if (decorated) bare_consonant = false;
    }
    return out;
  }

 private:
  static std::vector<std::string> keys(const WxTable& t, KeyClass c)
  {
    std::vector<std::string> out;
    for (const WxEntry& e : t.entries_of(c)) out.push_back(e.key);
    return out;
  }

  bool inherent(const std::string& vowel) const
  {
    if (vowel == "a") return true;
    std::string rest = vowel.substr(1);
    return std::find(modifiers_.begin(), modifiers_.end(), rest) != modifiers_.end();
  }

  static const std::string& pick(const std::vector<std::string>& v, std::mt19937_64& rng)
  {
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
  }

  std::vector<std::string> vowels_, matras_, consonants_, modifiers_;
};

}  // namespace gujclust::testing
