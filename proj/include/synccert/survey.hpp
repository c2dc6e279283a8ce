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
#include "synccert/contraction.hpp"
#include "synccert/oracle.hpp"

namespace synccert {

struct SurveyConfig {
  enum class Mode { kExhaustive, kRandom };
  Mode mode = Mode::kRandom;
  /// Exhaustive: exactly n states. Random: sizes n_min..n cycle by index.
  std::size_t n = 3;
  std::size_t n_min = 0;  // 0 means n_min = n
  std::size_t k = 2;
  /// Random mode only.
  std::size_t count = 0;
  std::uint64_t seed = 0;
  std::size_t threads = 1;
  OracleLimits limits;
  SearchLimits search;
};

/// Per-instance outcome. `id` is a generator spec for random instances
/// ("random:N:K:SEED") and "exhaustive:N:K:INDEX" otherwise; `automaton`
/// always holds the canonical file text.
struct SurveyRecord {
  std::string id;
  std::size_t n = 0;
  std::size_t k = 0;
  std::string automaton;
  bool skipped = false;
  std::string skip_reason;

  bool synchronizing = false;
  std::optional<std::size_t> shortest_sync;
  bool one_contracting = false;
  /// Cyclic collection with words of length <= n exists.
  bool aperiodic = false;
  bool circular_certified = false;
  /// For aperiodic instances: constructive bound word has length <= (n-1)^2.
  std::optional<bool> cerny_bound_ok;

  /// Smallest bound - worst over all sizes k with a reachable k-subset.
  std::optional<long long> worst_margin;
  std::vector<Conjecture2Violation> violations;
};

struct SurveySummary {
  std::size_t instances = 0;
  std::size_t skipped = 0;
  std::size_t synchronizing = 0;
  std::size_t one_contracting = 0;
  std::size_t aperiodic = 0;
  std::size_t circular_certified = 0;
  std::size_t violating_instances = 0;
  std::size_t violations = 0;
  std::optional<long long> worst_margin;
};

struct SurveyResult {
  std::vector<SurveyRecord> records;  // ordered by instance index
  SurveySummary summary;
};

/// Number of instances the configuration describes.
std::uint64_t survey_size(const SurveyConfig& config);

/// Automaton `index` of the exhaustive enumeration: the table read as a
/// base-n number, letter-major, first state least significant.
Automaton exhaustive_automaton(std::size_t n, std::size_t k, std::uint64_t index);

SurveyRecord survey_instance(const std::string& id, const Automaton& a,
                             const SurveyConfig& config);

/// Runs every instance (on config.threads workers) and merges in index order.
SurveyResult run_survey(const SurveyConfig& config);

}  // namespace synccert
