// Copyright 2026 The Greyassess Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GREYASSESS_ERROR_HPP
#define GREYASSESS_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace greyassess {

// Base of every exception thrown by the library. The CLI maps these to exit
// status 1 (data / validation error).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// lower > upper, or a non-finite endpoint.
class InvalidInterval : public Error {
 public:
  using Error::Error;
};

// Divisor interval contains zero.
class DivisionByZeroInterval : public Error {
 public:
  using Error::Error;
};

// Argument outside the operation's domain (non-positive scalar, t outside
// [0, 1], score outside the scale domain, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class UnknownLabel : public Error {
 public:
  explicit UnknownLabel(const std::string& label)
      : Error("unknown grade label '" + label + "'"), label_(label) {}

  const std::string& label() const noexcept { return label_; }

 private:
  std::string label_;
};

class EmptyDistribution : public Error {
 public:
  EmptyDistribution() : Error("distribution has no assessed objects (n = 0)") {}
};

class InvalidScale : public Error {
 public:
  using Error::Error;
};

class MixedScale : public Error {
 public:
  using Error::Error;
};

// Malformed input file. line() is 1-based; 0 when the error is not tied to a
// single line (e.g. missing data rows). The message reads
// "<source>:<line>: <detail>" with absent parts omitted.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& detail, const std::string& source = {})
      : Error(compose(line, detail, source)), line_(line), detail_(detail) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  static std::string compose(std::size_t line, const std::string& detail, const std::string& source) {
    std::string where = source;
    if (line != 0) where += (where.empty() ? "line " : ":") + std::to_string(line);
    return where.empty() ? detail : where + ": " + detail;
  }

  std::size_t line_;
  std::string detail_;
};

// Malformed grey-number expression. offset() is the 0-based byte offset of
// the offending character in the source text.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& what)
      : Error("at offset " + std::to_string(offset) + ": " + what),
        offset_(offset),
        detail_(what) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t offset_;
  std::string detail_;
};

}  // namespace greyassess

#endif  // GREYASSESS_ERROR_HPP
