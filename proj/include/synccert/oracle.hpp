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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "synccert/automaton.hpp"

namespace synccert {

struct OracleLimits {
  /// Largest n for which the 2^n subset table is built.
  std::size_t max_states = 20;
};

/// Largest capacity the table layout supports (32-bit subset indices).
inline constexpr std::size_t kOracleHardLimit = 32;

/// Exact BFS over the power automaton from Q. Letters are expanded in
/// alphabet order, so each witness is the shortlex-minimal word for its
/// subset.
class ReachabilityTable {
 public:
  ReachabilityTable(const Automaton& a, const OracleLimits& limits = {});

  std::size_t states() const { return n_; }
  bool reachable(StateSet s) const { return distance(s).has_value(); }
  std::optional<std::size_t> distance(StateSet s) const;
  std::optional<Word> witness(StateSet s) const;
  std::size_t reachable_count() const { return reachable_count_; }

  /// Unreachable nonempty subsets, in mask order.
  std::vector<StateSet> unreachable() const;

  /// Calls f(subset, distance) for every reachable subset in mask order.
  template <typename F>
  void for_each_reachable(F&& f) const {
    for (std::uint64_t m = 0; m < dist_.size(); ++m) {
      if (dist_[m] >= 0) f(StateSet::from_mask(m), static_cast<std::size_t>(dist_[m]));
    }
  }

 private:
  std::size_t n_;
  std::string alphabet_;
  std::vector<std::int32_t> dist_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint8_t> letter_;
  std::size_t reachable_count_ = 0;
};

inline ReachabilityTable reachability_table(const Automaton& a,
                                            const OracleLimits& limits = {}) {
  return ReachabilityTable(a, limits);
}

/// Shortest word mapping Q to a singleton (shortlex among equals), or nullopt.
std::optional<Word> shortest_sync_word(const Automaton& a,
                                       const OracleLimits& limits = {});
std::optional<Word> shortest_sync_word(const ReachabilityTable& table);

/// Pair-graph criterion: every pair of states can be merged. No size limit.
bool is_synchronizing(const Automaton& a);

struct SizeSummary {
  std::size_t k = 0;
  std::size_t subsets = 0;    // C(n, k)
  std::size_t reachable = 0;  // reachable k-subsets
  /// Longest shortest-word length among reachable k-subsets.
  std::optional<std::size_t> worst;
  std::size_t bound = 0;  // n(n - k)
  /// bound - worst; negative means a violation.
  std::optional<long long> margin;
};

struct Conjecture2Violation {
  StateSet subset;
  std::size_t distance = 0;
  std::size_t bound = 0;
  Word witness;
};

/// Compares each reachable k-subset's shortest-word length with n(n - k).
struct Conjecture2Report {
  std::string id;
  std::size_t n = 0;
  std::vector<SizeSummary> sizes;  // k = 1..n
  std::vector<Conjecture2Violation> violations;

  bool holds() const { return violations.empty(); }
};

Conjecture2Report conjecture2_check(const Automaton& a, std::string id = {},
                                    const OracleLimits& limits = {});
Conjecture2Report conjecture2_check(const ReachabilityTable& table,
                                    std::string id = {});

}  // namespace synccert
