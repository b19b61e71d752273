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

#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace gujclust::utf8 {

/// Decodes one codepoint starting at byte @p i and advances @p i past it.
/// Returns nullopt (leaving @p i untouched) on a malformed, overlong or
/// surrogate sequence.
inline std::optional<char32_t> next(std::string_view in, std::size_t& i)
{
  auto b0 = static_cast<unsigned char>(in[i]);
  char32_t cp;
  std::size_t len;
  if (b0 < 0x80) {
    cp = b0;
    len = 1;
  } else if ((b0 & 0xE0) == 0xC0) {
    cp = b0 & 0x1F;
    len = 2;
  } else if ((b0 & 0xF0) == 0xE0) {
    cp = b0 & 0x0F;
    len = 3;
  } else if ((b0 & 0xF8) == 0xF0) {
    cp = b0 & 0x07;
    len = 4;
  } else {
    return std::nullopt;
  }
  if (i + len > in.size()) return std::nullopt;
  for (std::size_t k = 1; k < len; ++k) {
    auto b = static_cast<unsigned char>(in[i + k]);
    if ((b & 0xC0) != 0x80) return std::nullopt;
    cp = (cp << 6) | (b & 0x3F);
  }
  static constexpr char32_t min_for_len[] = {0, 0, 0x80, 0x800, 0x10000};
  if (cp < min_for_len[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return std::nullopt;
  i += len;
  return cp;
}

inline std::optional<std::u32string> decode(std::string_view in)
{
  std::u32string out;
  out.reserve(in.size());
  std::size_t i = 0;
  while (i < in.size()) {
    auto cp = next(in, i);
    if (!cp) return std::nullopt;
    out.push_back(*cp);
  }
  return out;
}

inline void append(std::string& out, char32_t cp)
{
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

inline std::string encode(std::u32string_view in)
{
  std::string out;
  out.reserve(in.size() * 3);
  for (char32_t cp : in) append(out, cp);
  return out;
}

inline bool valid(std::string_view in) { return decode(in).has_value(); }

/// Number of codepoints; assumes valid input.
inline std::size_t length(std::string_view in)
{
  std::size_t n = 0;
  for (char c : in)
    if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) ++n;
  return n;
}

}  // namespace gujclust::utf8
