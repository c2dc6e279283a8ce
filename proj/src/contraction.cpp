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

#include "synccert/contraction.hpp"

#include <algorithm>
#include <numeric>
#include <string_view>
#include <unordered_map>

namespace synccert {

namespace {

// Excluded/contracting pair of a rank n-1 transformation.
std::optional<std::pair<State, State>> deficiency_pair(const Transformation& t) {
  if (t.size() < 2 || t.rank() + 1 != t.size()) return std::nullopt;
  std::optional<State> excluded;
  std::optional<State> contracting;
  for (std::size_t q = 0; q < t.size(); ++q) {
    if (t.indegree(static_cast<State>(q)) == 0) excluded = static_cast<State>(q);
    if (t.indegree(static_cast<State>(q)) == 2) contracting = static_cast<State>(q);
  }
  if (!excluded || !contracting) {
    throw InvariantError("rank n-1 transformation without 0/2 indegree pair");
  }
  return std::make_pair(*excluded, *contracting);
}

struct ImageHash {
  std::size_t operator()(const std::vector<State>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (State s : v) {
      h ^= s;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

std::optional<DeficientWord> classify_deficient(const Automaton& a,
                                                const Word& word) {
  auto pair = deficiency_pair(transformation_of(a, word));
  if (!pair) return std::nullopt;
  return DeficientWord{word, pair->first, pair->second};
}

bool is_cyclic(std::span<const State> state_map) {
  const std::size_t n = state_map.size();
  if (n == 0) return false;
  std::vector<bool> seen(n, false);
  State q = 0;
  for (std::size_t step = 0; step < n; ++step) {
    if (q >= n || seen[q]) return false;
    seen[q] = true;
    q = state_map[q];
  }
  return q == 0;
}

ContractingCollection make_collection(const Automaton& a,
                                      std::span<const Word> words) {
  const std::size_t n = a.size();
  if (words.size() != n) {
    throw PreconditionError("a contracting collection needs exactly " +
                            std::to_string(n) + " words, got " +
                            std::to_string(words.size()));
  }
  if (n == 1) {
    throw PreconditionError("a one-state automaton has no deficient words");
  }
  ContractingCollection out;
  out.words.resize(n);
  std::vector<bool> covered(n, false);
  for (const auto& w : words) {
    auto d = classify_deficient(a, w);
    if (!d) throw PreconditionError("'" + w + "' is not 1-deficient");
    if (covered[d->excluded]) {
      throw PreconditionError("state " + std::to_string(d->excluded + 1) +
                              " is excluded by more than one word");
    }
    covered[d->excluded] = true;
    out.words[d->excluded] = *d;
  }
  out.state_map.resize(n);
  for (std::size_t q = 0; q < n; ++q) {
    out.state_map[q] = out.words[q].contracting;
    out.max_word_length = std::max(out.max_word_length, out.words[q].word.size());
  }
  out.cyclic = is_cyclic(out.state_map);
  return out;
}

ContractingCollection trivial_collection() {
  ContractingCollection out;
  out.state_map = {0};
  out.cyclic = true;
  return out;
}

std::vector<std::optional<DeficientWord>> shortest_deficient_words(
    const Automaton& a) {
  const std::size_t n = a.size();
  std::vector<std::optional<DeficientWord>> out(n);
  if (n < 2) return out;
  const StateSet full = a.all_states();

  // Node q < n is Q \ {q}; node n is Q. Images of size < n-1 are dropped:
  // no prefix of a 1-deficient word has rank below n-1.
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent(n + 1, kNone);
  std::vector<std::size_t> via(n + 1, 0);
  std::vector<bool> seen(n + 1, false);
  auto node_of = [&](StateSet s) -> std::size_t {
    if (s == full) return n;
    if (s.size() + 1 != n) return kNone;
    return static_cast<std::size_t>(std::countr_zero(~s.mask()));
  };
  auto set_of = [&](std::size_t node) {
    StateSet s = full;
    if (node < n) s.erase(static_cast<State>(node));
    return s;
  };

  SubsetImage image(a);
  std::vector<std::size_t> queue{n};
  seen[n] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::size_t u = queue[head];
    for (std::size_t l = 0; l < a.alphabet_size(); ++l) {
      std::size_t v = node_of(image.apply(set_of(u), l));
      if (v == kNone || seen[v]) continue;
      seen[v] = true;
      parent[v] = u;
      via[v] = l;
      queue.push_back(v);
    }
  }

  for (std::size_t q = 0; q < n; ++q) {
    if (!seen[q]) continue;
    Word w;
    for (std::size_t v = q; v != n; v = parent[v]) w += a.letter(via[v]);
    std::reverse(w.begin(), w.end());
    auto d = classify_deficient(a, w);
    if (!d || d->excluded != q) {
      throw InvariantError("BFS produced a word that does not exclude its node");
    }
    out[q] = std::move(d);
  }
  return out;
}

void CandidatePairs::offer(State excluded, State contracting,
                           const Word& word) {
  auto [it, inserted] = witnesses_.try_emplace({excluded, contracting}, word);
  if (!inserted) return;
  auto& t = targets_[excluded];
  t.insert(std::upper_bound(t.begin(), t.end(), contracting), contracting);
}

CandidatePairs enumerate_deficient_pairs(const Automaton& a,
                                         std::size_t max_length,
                                         const SearchLimits& limits) {
  const std::size_t n = a.size();
  CandidatePairs out(n);
  if (n < 2) return out;

  struct Node {
    std::vector<State> image;
    std::size_t parent;
    std::size_t letter;
  };
  std::vector<Node> nodes;
  std::unordered_map<std::vector<State>, std::size_t, ImageHash> index;
  auto id = Transformation::identity(n).image_table();
  nodes.push_back({id, 0, 0});
  index.emplace(id, 0);

  auto word_of = [&](std::size_t node) {
    Word w;
    for (; node != 0; node = nodes[node].parent) w += a.letter(nodes[node].letter);
    std::reverse(w.begin(), w.end());
    return w;
  };

  // Level-by-level BFS; expanding parents in discovery order with letters
  // in alphabet order visits each class at its shortlex-minimal word.
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= max_length; ++len) {
    const std::size_t level_end = nodes.size();
    if (level_begin == level_end) break;
    for (std::size_t u = level_begin; u < level_end; ++u) {
      for (std::size_t l = 0; l < a.alphabet_size(); ++l) {
        std::vector<State> next(n);
        for (std::size_t q = 0; q < n; ++q) next[q] = a.next(nodes[u].image[q], l);
        Transformation t(next);
        if (t.rank() + 1 < n) continue;
        if (index.contains(next)) continue;
        if (nodes.size() >= limits.max_transformations) {
          throw CapacityError("deficient-word enumeration exceeded " +
                              std::to_string(limits.max_transformations) +
                              " transformations");
        }
        index.emplace(next, nodes.size());
        nodes.push_back({std::move(next), u, l});
        if (auto pair = deficiency_pair(t)) {
          if (!out.contains(pair->first, pair->second)) {
            out.offer(pair->first, pair->second, word_of(nodes.size() - 1));
          }
        }
      }
    }
    level_begin = level_end;
  }
  return out;
}

namespace {

bool extend_cycle(const CandidatePairs& pairs, std::vector<State>& path,
                  std::vector<bool>& used) {
  const std::size_t n = pairs.states();
  State last = path.back();
  if (path.size() == n) {
    return pairs.contains(last, path.front());
  }
  for (State next : pairs.targets(last)) {
    if (used[next]) continue;
    used[next] = true;
    path.push_back(next);
    if (extend_cycle(pairs, path, used)) return true;
    path.pop_back();
    used[next] = false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<State>> find_hamiltonian_cycle(
    const CandidatePairs& pairs) {
  const std::size_t n = pairs.states();
  if (n == 0) return std::nullopt;
  if (n == 1) return std::vector<State>{0};
  // Every vertex needs an outgoing and an incoming candidate edge.
  std::vector<bool> has_in(n, false);
  for (std::size_t q = 0; q < n; ++q) {
    if (pairs.targets(static_cast<State>(q)).empty()) return std::nullopt;
    for (State c : pairs.targets(static_cast<State>(q))) has_in[c] = true;
  }
  if (std::find(has_in.begin(), has_in.end(), false) != has_in.end()) {
    return std::nullopt;
  }

  std::vector<State> path{0};
  std::vector<bool> used(n, false);
  used[0] = true;
  if (!extend_cycle(pairs, path, used)) return std::nullopt;
  std::vector<State> successor(n);
  for (std::size_t i = 0; i < n; ++i) successor[path[i]] = path[(i + 1) % n];
  return successor;
}

std::optional<ContractingCollection> find_aperiodic_collection(
    const Automaton& a, std::size_t max_length, const SearchLimits& limits) {
  if (a.size() == 1) return trivial_collection();
  auto pairs = enumerate_deficient_pairs(a, max_length, limits);
  auto cycle = find_hamiltonian_cycle(pairs);
  if (!cycle) return std::nullopt;
  std::vector<Word> words;
  words.reserve(a.size());
  for (std::size_t q = 0; q < a.size(); ++q) {
    words.push_back(pairs.witness(static_cast<State>(q), (*cycle)[q]));
  }
  auto collection = make_collection(a, words);
  if (!collection.cyclic || collection.state_map != *cycle) {
    throw InvariantError("witness words do not realise the Hamiltonian cycle");
  }
  return collection;
}

std::vector<CircularAnalysis> circular_candidates(const Automaton& a) {
  const std::size_t n = a.size();
  std::vector<CircularAnalysis> out;
  if (n < 2) return out;
  for (std::size_t b = 0; b < a.alphabet_size(); ++b) {
    if (!is_cyclic(a.row(b))) continue;
    for (std::size_t l = 0; l < a.alphabet_size(); ++l) {
      auto pair = deficiency_pair(transformation_of_letter(a, l));
      if (!pair) continue;
      CircularAnalysis c;
      c.cycle_letter = a.letter(b);
      c.deficient_letter = a.letter(l);
      c.excluded = pair->first;
      c.contracting = pair->second;
      State q = c.excluded;
      do {
        q = a.next(q, b);
        ++c.distance;
      } while (q != c.contracting);
      c.gcd = std::gcd(c.distance, n);
      out.push_back(c);
    }
  }
  return out;
}

std::optional<CircularCertificate> circular_fast_path(const Automaton& a) {
  const std::size_t n = a.size();
  for (const auto& c : circular_candidates(a)) {
    if (c.gcd != 1) continue;
    std::vector<Word> words;
    Word w(1, c.deficient_letter);
    for (std::size_t i = 0; i < n; ++i) {
      words.push_back(w);
      w += c.cycle_letter;
    }
    auto collection = make_collection(a, words);
    // sigma(q) is q moved d steps along the cycle letter.
    for (std::size_t q = 0; q < n; ++q) {
      State r = static_cast<State>(q);
      std::size_t b = *a.letter_index(c.cycle_letter);
      for (std::size_t k = 0; k < c.distance; ++k) r = a.next(r, b);
      if (collection.state_map[q] != r) {
        throw InvariantError("circular collection is not a rotation by d");
      }
    }
    if (!collection.cyclic) {
      throw InvariantError("rotation with gcd(d, n) = 1 is not cyclic");
    }
    return CircularCertificate{c, std::move(collection)};
  }
  return std::nullopt;
}

}  // namespace synccert
