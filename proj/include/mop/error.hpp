// Copyright 2026 The moprc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace mop {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A canonical row attaches its vertex to a pair that is not an exterior edge.
class InvalidAttachment : public Error {
 public:
  InvalidAttachment(int row, const std::string& what)
      : Error("row " + std::to_string(row) + ": " + what), row_(row) {}
  int row() const noexcept { return row_; }

 private:
  int row_;
};

/// Malformed text input. `line` is 1-based.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

class NotMop : public Error {
 public:
  using Error::Error;
};

class NotChordal : public Error {
 public:
  using Error::Error;
};

/// Parameter outside the domain of a generator.
class DomainError : public Error {
 public:
  using Error::Error;
};

class PaletteExhausted : public Error {
 public:
  using Error::Error;
};

/// An exact oracle was asked to work beyond its configured caps.
class ScaleLimit : public Error {
 public:
  using Error::Error;
};

/// Exact search found nothing up to its bound (or ran out of time).
class Exhausted : public Error {
 public:
  Exhausted(const std::string& what, bool timed_out)
      : Error(what), timed_out_(timed_out) {}
  bool timed_out() const noexcept { return timed_out_; }

 private:
  bool timed_out_;
};

class NotACut : public Error {
 public:
  using Error::Error;
};

}  // namespace mop
