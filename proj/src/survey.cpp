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

#include "synccert/survey.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <random>
#include <thread>

#include "synccert/generators.hpp"
#include "synccert/reachability.hpp"

namespace synccert {

namespace {

constexpr std::uint64_t kMaxExhaustive = std::uint64_t{1} << 32;

std::size_t random_n(const SurveyConfig& c, std::uint64_t index) {
  std::size_t lo = c.n_min == 0 ? c.n : c.n_min;
  return lo + static_cast<std::size_t>(index % (c.n - lo + 1));
}

}  // namespace

std::uint64_t survey_size(const SurveyConfig& config) {
  if (config.mode == SurveyConfig::Mode::kRandom) return config.count;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < config.n * config.k; ++i) {
    total *= config.n;
    if (total > kMaxExhaustive) {
      throw CapacityError("exhaustive survey would exceed 2^32 automata");
    }
  }
  return total;
}

Automaton exhaustive_automaton(std::size_t n, std::size_t k,
                               std::uint64_t index) {
  std::vector<State> table(n * k);
  for (auto& t : table) {
    t = static_cast<State>(index % n);
    index /= n;
  }
  return Automaton(n, default_alphabet(k), std::move(table));
}

SurveyRecord survey_instance(const std::string& id, const Automaton& a,
                             const SurveyConfig& config) {
  SurveyRecord r;
  r.id = id;
  r.n = a.size();
  r.k = a.alphabet_size();
  r.automaton = serialize_automaton(a);
  try {
    ReachabilityTable table(a, config.limits);
    if (auto w = shortest_sync_word(table)) {
      r.synchronizing = true;
      r.shortest_sync = w->size();
    }
    if (r.synchronizing != is_synchronizing(a)) {
      throw InvariantError("pair-graph and subset BFS disagree on " + id);
    }

    auto deficient = shortest_deficient_words(a);
    r.one_contracting =
        a.size() == 1 ||
        std::all_of(deficient.begin(), deficient.end(),
                    [](const auto& d) { return d.has_value(); });
    r.circular_certified = circular_fast_path(a).has_value();
    if (auto collection = find_aperiodic_collection(a, a.size(), config.search)) {
      r.aperiodic = true;
      auto bound = cerny_bound_word(a, *collection);
      const std::size_t n = a.size();
      r.cerny_bound_ok = bound.word.size() <= (n - 1) * (n - 1) &&
                         apply_word(a, a.all_states(), bound.word).size() == 1;
    }

    auto report = conjecture2_check(table, id);
    for (const auto& s : report.sizes) {
      if (s.margin && (!r.worst_margin || *s.margin < *r.worst_margin)) {
        r.worst_margin = s.margin;
      }
    }
    r.violations = std::move(report.violations);
  } catch (const CapacityError& e) {
    r.skipped = true;
    r.skip_reason = e.what();
  }
  return r;
}

SurveyResult run_survey(const SurveyConfig& config) {
  if (config.mode == SurveyConfig::Mode::kRandom) {
    std::size_t lo = config.n_min == 0 ? config.n : config.n_min;
    if (config.n == 0 || lo > config.n) {
      throw PreconditionError("survey needs 1 <= n-min <= n");
    }
  } else if (config.n == 0) {
    throw PreconditionError("survey needs n >= 1");
  }
  default_alphabet(config.k);

  const std::uint64_t total = survey_size(config);
  // Per-instance seeds are drawn up front so results do not depend on
  // scheduling.
  std::vector<std::uint64_t> seeds;
  if (config.mode == SurveyConfig::Mode::kRandom) {
    std::mt19937_64 rng(config.seed);
    seeds.resize(total);
    for (auto& s : seeds) s = rng();
  }

  SurveyResult result;
  result.records.resize(total);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto run_one = [&](std::uint64_t i) {
    if (config.mode == SurveyConfig::Mode::kRandom) {
      GeneratorSpec spec;
      spec.family = GeneratorSpec::Family::kRandom;
      spec.n = random_n(config, i);
      spec.k = config.k;
      spec.seed = seeds[i];
      result.records[i] = survey_instance(spec.to_string(), spec.build(), config);
    } else {
      std::string id = "exhaustive:" + std::to_string(config.n) + ":" +
                       std::to_string(config.k) + ":" + std::to_string(i);
      result.records[i] = survey_instance(
          id, exhaustive_automaton(config.n, config.k, i), config);
    }
  };
  // The first failure stops further work and is rethrown after the join.
  auto worker = [&] {
    for (std::uint64_t i = next++; i < total; i = next++) {
      try {
        run_one(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = total;
        return;
      }
    }
  };
  const std::size_t threads = std::max<std::size_t>(1, config.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  auto& s = result.summary;
  for (const auto& r : result.records) {
    ++s.instances;
    if (r.skipped) {
      ++s.skipped;
      continue;
    }
    s.synchronizing += r.synchronizing;
    s.one_contracting += r.one_contracting;
    s.aperiodic += r.aperiodic;
    s.circular_certified += r.circular_certified;
    s.violating_instances += !r.violations.empty();
    s.violations += r.violations.size();
    if (r.worst_margin && (!s.worst_margin || *r.worst_margin < *s.worst_margin)) {
      s.worst_margin = r.worst_margin;
    }
  }
  return result;
}

}  // namespace synccert
