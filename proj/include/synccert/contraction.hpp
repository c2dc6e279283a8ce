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
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "synccert/automaton.hpp"

namespace synccert {

/// A word w with delta(Q, w) = Q \ {excluded}. Exactly one state,
/// `contracting`, has two preimages under w.
struct DeficientWord {
  Word word;
  State excluded = 0;
  State contracting = 0;

  bool operator==(const DeficientWord&) const = default;
};

/// Classifies `word`: returns its excluded/contracting pair when it has
/// rank n - 1, nullopt otherwise.
std::optional<DeficientWord> classify_deficient(const Automaton& a,
                                                const Word& word);

/// One deficient word per excluded state, together with the induced state
/// map (excluded -> contracting).
struct ContractingCollection {
  /// words[q].excluded == q for every state q.
  std::vector<DeficientWord> words;
  std::vector<State> state_map;
  bool cyclic = false;
  std::size_t max_word_length = 0;

  std::size_t size() const { return words.size(); }
  /// All words have length at most n.
  bool efficient() const { return max_word_length <= words.size(); }
};

/// Builds a collection from explicit words (any order). Throws
/// PreconditionError unless the words are deficient and exclude every state
/// exactly once.
ContractingCollection make_collection(const Automaton& a,
                                      std::span<const Word> words);

/// The degenerate collection of a one-state automaton: no words, the
/// identity state map, cyclic.
ContractingCollection trivial_collection();

/// True iff `state_map` is a permutation with a single orbit through all
/// states. A one-state identity counts as cyclic.
bool is_cyclic(std::span<const State> state_map);

/// For every state q, a shortest word w with delta(Q, w) = Q \ {q}, found by
/// BFS over Q and the (n-1)-subsets of the power automaton. Entry q is empty
/// when no such word exists. Ties go to the lexicographically smallest word.
std::vector<std::optional<DeficientWord>> shortest_deficient_words(
    const Automaton& a);

/// All (excluded, contracting) pairs realised by words of length <= L, with
/// a shortlex-minimal witness for each pair.
class CandidatePairs {
 public:
  explicit CandidatePairs(std::size_t n) : n_(n), targets_(n) {}

  std::size_t states() const { return n_; }
  bool empty() const { return witnesses_.empty(); }
  std::size_t count() const { return witnesses_.size(); }

  bool contains(State excluded, State contracting) const {
    return witnesses_.contains({excluded, contracting});
  }
  const Word& witness(State excluded, State contracting) const {
    return witnesses_.at({excluded, contracting});
  }
  /// Contracting states available for `excluded`, ascending.
  const std::vector<State>& targets(State excluded) const {
    return targets_[excluded];
  }
  const std::map<std::pair<State, State>, Word>& pairs() const {
    return witnesses_;
  }

  /// Keeps the first witness offered for a pair.
  void offer(State excluded, State contracting, const Word& word);

 private:
  std::size_t n_;
  std::map<std::pair<State, State>, Word> witnesses_;
  std::vector<std::vector<State>> targets_;
};

struct SearchLimits {
  /// Upper bound on distinct transformations stored during enumeration.
  std::size_t max_transformations = std::size_t{1} << 21;
};

/// BFS over distinct transformations of rank >= n - 1 reachable by words of
/// length <= max_length. Throws CapacityError past `limits`.
CandidatePairs enumerate_deficient_pairs(const Automaton& a,
                                         std::size_t max_length,
                                         const SearchLimits& limits = {});

/// Searches the candidate digraph {q -> c} for a Hamiltonian cycle by exact
/// backtracking, starting at state 1 and trying targets in ascending order.
/// A result is a cyclic collection with words of length <= max_length;
/// nullopt proves none exists at that bound. A one-state automaton yields
/// trivial_collection().
std::optional<ContractingCollection> find_aperiodic_collection(
    const Automaton& a, std::size_t max_length, const SearchLimits& limits = {});

/// Same search over a precomputed candidate set.
std::optional<std::vector<State>> find_hamiltonian_cycle(
    const CandidatePairs& pairs);

/// A cyclic letter paired with a 1-deficient letter.
struct CircularAnalysis {
  char cycle_letter = 0;
  char deficient_letter = 0;
  State excluded = 0;
  State contracting = 0;
  /// Steps along the cycle letter from excluded to contracting.
  std::size_t distance = 0;
  std::size_t gcd = 0;
};

/// Every (cycle letter, deficient letter) combination, cycle letter outer,
/// both in alphabet order.
std::vector<CircularAnalysis> circular_candidates(const Automaton& a);

struct CircularCertificate {
  CircularAnalysis analysis;
  ContractingCollection collection;
};

/// If a letter b cycles all states and a letter a is 1-deficient with
/// gcd(d, n) = 1, returns W = {a b^i : 0 <= i < n}, whose state map is
/// rotation by d along b. The first qualifying combination is used.
std::optional<CircularCertificate> circular_fast_path(const Automaton& a);

}  // namespace synccert
