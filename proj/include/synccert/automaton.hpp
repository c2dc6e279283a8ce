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

#include <array>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "synccert/errors.hpp"
#include "synccert/state_set.hpp"

namespace synccert {

/// Words are plain strings over single-character letters, e.g. "baaabaaab".
using Word = std::string;

/// Total deterministic automaton (Q, Sigma, delta) without initial or
/// final states. Immutable after construction.
class Automaton {
 public:
  /// `table[l * n + q]` is the image of state q under letter l.
  /// Throws PreconditionError if the data does not describe a total DFA.
  Automaton(std::size_t n, std::string alphabet, std::vector<State> table);

  std::size_t size() const { return n_; }
  std::size_t alphabet_size() const { return alphabet_.size(); }
  const std::string& alphabet() const { return alphabet_; }
  char letter(std::size_t index) const { return alphabet_[index]; }
  std::optional<std::size_t> letter_index(char c) const;

  State next(State q, std::size_t letter) const {
    return table_[letter * n_ + q];
  }
  std::span<const State> row(std::size_t letter) const {
    return {table_.data() + letter * n_, n_};
  }

  /// Image of a single state; throws UnknownLetterError.
  State run(State q, std::string_view word) const;

  /// Letter indices of `word`; throws UnknownLetterError.
  std::vector<std::size_t> encode(std::string_view word) const;

  StateSet all_states() const { return StateSet::full(n_); }

  bool operator==(const Automaton&) const = default;

 private:
  std::size_t n_;
  std::string alphabet_;
  std::vector<State> table_;
};

/// The action of a word on the states.
class Transformation {
 public:
  explicit Transformation(std::vector<State> image);
  static Transformation identity(std::size_t n);

  std::size_t size() const { return image_.size(); }
  State operator()(State q) const { return image_[q]; }
  const std::vector<State>& image_table() const { return image_; }

  std::size_t rank() const { return rank_; }
  std::size_t indegree(State q) const { return indegree_[q]; }
  const std::vector<std::size_t>& indegrees() const { return indegree_; }

  /// Image set of Q. Requires size() <= 64.
  StateSet image() const;

  /// First `*this`, then `next` (the transformation of uv is of(u).then(of(v))).
  Transformation then(const Transformation& next) const;

  bool operator==(const Transformation& o) const { return image_ == o.image_; }

 private:
  std::vector<State> image_;
  std::vector<std::size_t> indegree_;
  std::size_t rank_ = 0;
};

/// delta(S, w). Empty S maps to the empty set, the empty word is the identity.
StateSet apply_word(const Automaton& a, StateSet s, std::string_view word);

/// delta^{-1}(S, w) = {q : delta(q, w) in S}.
StateSet preimage(const Automaton& a, StateSet s, std::string_view word);

Transformation transformation_of(const Automaton& a, std::string_view word);

Transformation transformation_of_letter(const Automaton& a, std::size_t letter);

/// Fast subset image for automata with at most 64 states: per letter, one
/// 256-entry table for each byte of the mask.
class SubsetImage {
 public:
  explicit SubsetImage(const Automaton& a);

  StateSet apply(StateSet s, std::size_t letter) const {
    std::uint64_t out = 0;
    std::uint64_t m = s.mask();
    const auto& t = tables_[letter];
    for (std::size_t chunk = 0; m != 0; ++chunk, m >>= 8) {
      out |= t[chunk * 256 + (m & 0xff)];
    }
    return StateSet::from_mask(out);
  }

  std::size_t alphabet_size() const { return tables_.size(); }

 private:
  std::vector<std::vector<std::uint64_t>> tables_;
};

/// Reads the line-based automaton format:
///
///   # comment
///   states <n>
///   alphabet <l1> ... <lk>
///   <l> <t1> ... <tn>          one row per letter, any order
///
/// Throws ParseError naming the offending line.
Automaton parse_automaton(std::string_view text);
Automaton parse_automaton(std::istream& in);
Automaton load_automaton(const std::string& path);

/// Canonical form: header, alphabet line, rows in alphabet order.
std::string serialize_automaton(const Automaton& a);

/// Graphviz rendering of the transition graph.
std::string to_dot(const Automaton& a);

}  // namespace synccert
