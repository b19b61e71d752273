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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gujclust {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Errors tied to a 1-based line of some input document.
class LineError : public Error {
 public:
  LineError(std::size_t line, const std::string& what)
    : Error("line " + std::to_string(line) + ": " + what), line_(line)
  {
  }
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// ---------------------------------------------------------------------------
// transliteration

class UnknownWxSequence : public Error {
 public:
  explicit UnknownWxSequence(std::size_t position)
    : Error("no WX key matches at byte " + std::to_string(position)), position_(position)
  {
  }
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class UnknownScriptChar : public Error {
 public:
  UnknownScriptChar(std::size_t position, char32_t codepoint)
    : Error("unmapped codepoint U+" + hex(codepoint) + " at index " + std::to_string(position)),
      position_(position),
      codepoint_(codepoint)
  {
  }
  std::size_t position() const noexcept { return position_; }
  char32_t codepoint() const noexcept { return codepoint_; }

 private:
  static std::string hex(char32_t cp)
  {
    static constexpr char digits[] = "0123456789ABCDEF";
    std::string out;
    for (int shift = (cp > 0xFFFF ? 20 : 12); shift >= 0; shift -= 4) out += digits[(cp >> shift) & 0xF];
    return out;
  }

  std::size_t position_;
  char32_t codepoint_;
};

class DuplicateKey : public Error {
 public:
  explicit DuplicateKey(const std::string& key) : Error("duplicate key '" + key + "'"), key_(key) {}
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

class MalformedRow : public LineError {
 public:
  using LineError::LineError;
};

// ---------------------------------------------------------------------------
// corpus input/output

class InvalidEncoding : public LineError {
 public:
  explicit InvalidEncoding(std::size_t line) : LineError(line, "invalid UTF-8") {}
};

class EmptyWord : public LineError {
 public:
  explicit EmptyWord(std::size_t line) : LineError(line, "tag separator with no word before it") {}
};

/// A tab-format line whose word field contains whitespace.
class MalformedLine : public LineError {
 public:
  using LineError::LineError;
};

class IoFailure : public Error {
 public:
  IoFailure(const std::string& path, const std::string& cause)
    : Error(path + ": " + cause), path_(path)
  {
  }
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

// ---------------------------------------------------------------------------
// clustering

class EmptyInput : public Error {
 public:
  EmptyInput() : Error("empty word list") {}
  explicit EmptyInput(const std::string& what) : Error(what) {}
};

class MalformedMatrix : public Error {
 public:
  using Error::Error;
};

}  // namespace gujclust
