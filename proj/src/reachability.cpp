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

#include "synccert/reachability.hpp"

#include <algorithm>

namespace synccert {

namespace {

void check_collection(const Automaton& a, const ContractingCollection& c) {
  if (!c.cyclic) {
    throw PreconditionError("backward chaining needs a cyclic state map");
  }
  if (c.state_map.size() != a.size()) {
    throw PreconditionError("collection does not match the automaton size");
  }
  if (a.size() > 1 && c.words.size() != a.size()) {
    throw PreconditionError("collection needs one word per state");
  }
  for (State q = 0; q < c.words.size(); ++q) {
    const auto& w = c.words[q];
    auto d = classify_deficient(a, w.word);
    if (!d || d->excluded != q || d->contracting != c.state_map[q]) {
      throw PreconditionError("'" + w.word +
                              "' does not match its collection entry on this "
                              "automaton");
    }
  }
}

}  // namespace

ReachTrace reach_subset(const Automaton& a,
                        const ContractingCollection& collection,
                        StateSet target, TieBreak tie_break) {
  check_collection(a, collection);
  if (target.empty()) throw PreconditionError("target subset is empty");
  const StateSet full = a.all_states();
  if (!target.is_subset_of(full)) {
    throw PreconditionError("target subset has states outside the automaton");
  }

  ReachTrace trace;
  trace.target = target;
  StateSet current = target;
  while (current != full) {
    std::optional<State> pick;
    for (State i = 0; i < a.size(); ++i) {
      if (current.contains(i) || !current.contains(collection.state_map[i])) {
        continue;
      }
      if (!pick) {
        pick = i;
        if (tie_break == TieBreak::kSmallestLabel) break;
      } else if (collection.words[i].word.size() <
                 collection.words[*pick].word.size()) {
        pick = i;
      }
    }
    // A cyclic state map leaves no proper nonempty subset invariant.
    if (!pick) throw InvariantError("no state leaves T with contraction into T");

    const Word& w = collection.words[*pick].word;
    StateSet before = preimage(a, current, w);
    if (before.size() != current.size() + 1) {
      throw InvariantError("backward step did not grow the subset by one");
    }
    trace.steps.push_back({*pick, w, current, before});
    current = before;
  }

  for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
    trace.final_word += it->word;
  }
  if (apply_word(a, full, trace.final_word) != target) {
    throw InvariantError("chained word does not reach the target");
  }
  return trace;
}

Word synchronizing_word(const Automaton& a,
                        const ContractingCollection& collection,
                        TieBreak tie_break) {
  check_collection(a, collection);
  std::optional<Word> best;
  for (State q = 0; q < a.size(); ++q) {
    auto trace = reach_subset(a, collection, StateSet::singleton(q), tie_break);
    if (!best || trace.final_word.size() < best->size()) {
      best = std::move(trace.final_word);
    }
  }
  return *best;
}

BoundWord cerny_bound_word(const Automaton& a,
                           const ContractingCollection& collection,
                           TieBreak tie_break) {
  check_collection(a, collection);
  if (!collection.efficient()) {
    throw PreconditionError("the (n-1)^2 bound needs an efficient collection");
  }
  const std::size_t n = a.size();
  if (n == 1) return BoundWord{"", a.all_states(), 0};
  for (State p = 0; p < n; ++p) {
    for (State q = p + 1; q < n; ++q) {
      for (std::size_t l = 0; l < a.alphabet_size(); ++l) {
        if (a.next(p, l) != a.next(q, l)) continue;
        StateSet pair = StateSet::singleton(p) | StateSet::singleton(q);
        BoundWord out;
        out.pair = pair;
        out.merge_letter = a.letter(l);
        out.word = reach_subset(a, collection, pair, tie_break).final_word;
        out.word += out.merge_letter;
        if (out.word.size() > (n - 1) * (n - 1)) {
          throw InvariantError("bound word longer than (n-1)^2");
        }
        return out;
      }
    }
  }
  throw InvariantError("cyclic collection but no pair merges under a letter");
}

}  // namespace synccert
