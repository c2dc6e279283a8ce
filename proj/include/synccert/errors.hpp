// Copyright 2026 The synccert Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace synccert {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A size limit (state-set width, table size, search budget) was exceeded.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A word used a letter outside the automaton's alphabet.
class UnknownLetterError : public Error {
 public:
  UnknownLetterError(char letter)
      : Error(std::string("letter '") + letter + "' is not in the alphabet"),
        letter_(letter) {}
  char letter() const noexcept { return letter_; }

 private:
  char letter_;
};

/// Caller broke an operation's precondition (e.g. empty target set).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An internal invariant failed. Always a bug, never bad user input.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class ParseErrorKind {
  kMalformedHeader,
  kMalformedAlphabet,
  kDuplicateLetter,
  kBadLetter,
  kUnknownLetter,
  kDuplicateRow,
  kMissingRow,
  kRowLength,
  kBadTarget,
  kTargetOutOfRange,
  kTrailingContent,
};

const char* to_string(ParseErrorKind kind);

class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, const std::string& detail)
      : Error("line " + std::to_string(line) + ": " + to_string(kind) + ": " +
              detail),
        kind_(kind),
        line_(line) {}

  ParseErrorKind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
};

}  // namespace synccert
