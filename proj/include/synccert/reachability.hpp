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
#include <vector>

#include "synccert/automaton.hpp"
#include "synccert/contraction.hpp"

namespace synccert {

/// One backward step: `before` is reached from `after` by `word`, which
/// excludes `chosen` and contracts into a state of `before`.
struct ReachStep {
  State chosen = 0;
  Word word;
  StateSet before;
  StateSet after;
};

/// Record of the backward chaining from a target subset up to Q. Steps are in
/// the order they were taken, so the last step's `after` is Q and the final
/// word is the step words in reverse order.
struct ReachTrace {
  StateSet target;
  std::vector<ReachStep> steps;
  Word final_word;
};

enum class TieBreak {
  /// Smallest excluded-state label among valid choices.
  kSmallestLabel,
  /// Shortest collection word, then smallest label.
  kShortestWord,
};

/// Builds a word w with delta(Q, w) = target from n - |target| collection
/// words. Each step picks a state i outside T whose contracting state lies in
/// T, prepends w_i and replaces T by its preimage under w_i.
///
/// Throws PreconditionError if `collection` is not cyclic or `target` is empty.
ReachTrace reach_subset(const Automaton& a,
                        const ContractingCollection& collection,
                        StateSet target,
                        TieBreak tie_break = TieBreak::kSmallestLabel);

/// Shortest of the n singleton words from reach_subset (ties: smallest state).
Word synchronizing_word(const Automaton& a,
                        const ContractingCollection& collection,
                        TieBreak tie_break = TieBreak::kSmallestLabel);

struct BoundWord {
  Word word;
  /// Pair reached by the collection words, merged by `merge_letter`.
  StateSet pair;
  char merge_letter = 0;
};

/// Reaches the first pair (lexicographic) merged by some letter (alphabet
/// order) and appends that letter. For an efficient collection the result has
/// length at most (n-1)^2. Throws PreconditionError for a non-efficient or
/// non-cyclic collection.
BoundWord cerny_bound_word(const Automaton& a,
                           const ContractingCollection& collection,
                           TieBreak tie_break = TieBreak::kSmallestLabel);

}  // namespace synccert
