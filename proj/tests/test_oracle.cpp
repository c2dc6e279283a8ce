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

#include <doctest.h>

#include "synccert/generators.hpp"
#include "synccert/oracle.hpp"
#include "synccert/survey.hpp"
#include "test_support.hpp"

using namespace synccert;

namespace {

StateSet S(std::string_view labels, std::size_t n) {
  return StateSet::parse(labels, n);
}

Automaton rename_letters(const Automaton& a, const std::string& order) {
  // Same letters, rows permuted so the alphabet is listed in `order`.
  std::vector<State> table;
  for (char c : order) {
    auto row = a.row(*a.letter_index(c));
    table.insert(table.end(), row.begin(), row.end());
  }
  return Automaton(a.size(), order, table);
}

}  // namespace

TEST_CASE("C4 reachability table") {
  auto c4 = fixture("fig1");
  ReachabilityTable t(c4);
  CHECK(t.distance(c4.all_states()) == 0u);
  CHECK(t.witness(c4.all_states()) == "");
  CHECK(t.distance(S("1", 4)) == 9u);
  CHECK(t.distance(S("1,3,4", 4)) == 3u);
  CHECK(t.witness(S("1,3,4", 4)) == "baa");
  CHECK(t.distance(S("1,2,3", 4)) == 1u);
  CHECK_FALSE(t.reachable(StateSet{}));
  // The empty set is never reachable and is not listed.
  CHECK(t.unreachable().size() + t.reachable_count() == 15u);
}

TEST_CASE("fig3 reaches no singleton") {
  auto fig3 = fixture("fig3");
  ReachabilityTable t(fig3);
  for (State q = 0; q < 4; ++q) CHECK_FALSE(t.reachable(StateSet::singleton(q)));
  CHECK_FALSE(shortest_sync_word(fig3));
  CHECK_FALSE(is_synchronizing(fig3));
}

TEST_CASE("shortest synchronizing words") {
  auto c4 = fixture("fig1");
  CHECK(shortest_sync_word(c4) == "baaabaaab");
  CHECK(is_synchronizing(c4));
  auto fig5 = shortest_sync_word(fixture("fig5"));
  REQUIRE(fig5);
  CHECK(fig5->size() <= 6);
  CHECK(transformation_of(fixture("fig5"), *fig5).rank() == 1);
  Automaton one(1, "a", {0});
  CHECK(is_synchronizing(one));
  CHECK(shortest_sync_word(one) == "");
}

TEST_CASE("table agrees with the set-based BFS") {
  std::mt19937 rng(23);
  for (int i = 0; i < 200; ++i) {
    std::size_t n = 1 + rng() % 7;
    auto a = testing::random_test_automaton(rng, n, 1 + rng() % 3);
    ReachabilityTable t(a);
    auto expect = testing::naive_power_bfs(a);
    std::size_t reachable = 0;
    t.for_each_reachable([&](StateSet s, std::size_t d) {
      ++reachable;
      auto it = expect.find(testing::labels_of(s));
      REQUIRE(it != expect.end());
      CHECK(it->second == d);
      auto w = t.witness(s);
      REQUIRE(w);
      CHECK(w->size() == d);
      CHECK(apply_word(a, a.all_states(), *w) == s);
    });
    CHECK(reachable == expect.size());
    CHECK(reachable == t.reachable_count());

    auto sync = shortest_sync_word(t);
    CHECK(sync.has_value() == is_synchronizing(a));
    auto naive = testing::naive_sync_length(a);
    CHECK(sync.has_value() == naive.has_value());
    if (sync) CHECK(sync->size() == *naive);
  }
}

TEST_CASE("pair-graph criterion matches the subset BFS up to n = 8") {
  std::mt19937 rng(31);
  int sync = 0;
  for (int i = 0; i < 600; ++i) {
    std::size_t n = 1 + rng() % 8;
    auto a = testing::random_test_automaton(rng, n, 1 + rng() % 3);
    bool s = is_synchronizing(a);
    sync += s;
    CHECK(s == shortest_sync_word(a).has_value());
  }
  CHECK(sync > 100);
  CHECK(sync < 600);
}

TEST_CASE("witness lengths do not depend on the alphabet order") {
  std::mt19937 rng(43);
  for (int i = 0; i < 100; ++i) {
    std::size_t n = 2 + rng() % 6;
    auto a = testing::random_test_automaton(rng, n, 3);
    auto b = rename_letters(a, "cab");
    ReachabilityTable ta(a), tb(b);
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
      CHECK(ta.distance(StateSet::from_mask(m)) == tb.distance(StateSet::from_mask(m)));
    }
  }
}

TEST_CASE("capacity") {
  OracleLimits small;
  small.max_states = 4;
  CHECK_NOTHROW(ReachabilityTable(fixture("fig1"), small));
  CHECK_THROWS_AS(ReachabilityTable(cerny(5), small), CapacityError);
  CHECK_THROWS_AS(ReachabilityTable(cerny(21)), CapacityError);
  CHECK_THROWS_AS(conjecture2_check(cerny(21)), CapacityError);
  OracleLimits big;
  big.max_states = 100;
  CHECK_THROWS_AS(ReachabilityTable(cerny(33), big), CapacityError);
}

TEST_CASE("n(n-k) report on C4") {
  auto r = conjecture2_check(fixture("fig1"), "fig1");
  CHECK(r.id == "fig1");
  CHECK(r.holds());
  REQUIRE(r.sizes.size() == 4);
  CHECK(r.sizes[0].k == 1);
  // Singletons {1..4} sit at distances 9, 10, 11, 12: the shortest
  // synchronizing word has length 9, the worst singleton meets the bound.
  ReachabilityTable t(fixture("fig1"));
  for (State q = 0; q < 4; ++q) CHECK(t.distance(StateSet::singleton(q)) == 9u + q);
  CHECK(r.sizes[0].worst == 12u);
  CHECK(r.sizes[0].bound == 12u);
  CHECK(r.sizes[0].margin == 0);
  CHECK(r.sizes[0].subsets == 4u);
  CHECK(r.sizes[3].worst == 0u);
  CHECK(r.sizes[3].bound == 0u);
  CHECK(r.sizes[3].margin == 0);
}

TEST_CASE("n(n-k) report details match the table") {
  std::mt19937 rng(59);
  for (int i = 0; i < 100; ++i) {
    std::size_t n = 1 + rng() % 6;
    auto a = testing::random_test_automaton(rng, n, 2);
    ReachabilityTable t(a);
    auto r = conjecture2_check(t);
    auto expect = testing::naive_power_bfs(a);
    for (const auto& s : r.sizes) {
      std::optional<std::size_t> worst;
      std::size_t count = 0;
      for (const auto& [labels, d] : expect) {
        if (labels.size() != s.k) continue;
        ++count;
        if (!worst || d > *worst) worst = d;
      }
      CHECK(s.reachable == count);
      CHECK(s.worst == worst);
      CHECK(s.bound == n * (n - s.k));
    }
    for (const auto& v : r.violations) {
      CHECK(t.distance(v.subset) == v.distance);
      CHECK(v.distance > v.bound);
      CHECK(apply_word(a, a.all_states(), v.witness) == v.subset);
    }
  }
}

// Regression fixture: exhaustive survey of all 729 binary automata on three
// states. Counts were produced by the survey and cross-checked here against
// the set-based BFS.
TEST_CASE("exhaustive n = 3, binary alphabet") {
  SurveyConfig c;
  c.mode = SurveyConfig::Mode::kExhaustive;
  c.n = 3;
  c.k = 2;
  c.threads = 2;
  auto result = run_survey(c);
  CHECK(result.summary.instances == 729);
  CHECK(result.summary.violations == 0);
  CHECK(result.summary.skipped == 0);

  std::size_t sync = 0, one_contracting = 0, aperiodic = 0;
  long long worst_margin = 1000;
  for (std::uint64_t i = 0; i < 729; ++i) {
    auto a = exhaustive_automaton(3, 2, i);
    sync += testing::naive_sync_length(a).has_value();
    // Words up to length 7 cover every path through the 8 subsets.
    std::set<int> excluded;
    for (auto [e, c] : testing::naive_pairs(a, 7)) excluded.insert(e);
    one_contracting += excluded.size() == 3;
    aperiodic += testing::naive_has_hamiltonian_cycle(3, testing::naive_pairs(a, 3));
    for (const auto& [labels, d] : testing::naive_power_bfs(a)) {
      if (labels.empty()) continue;
      worst_margin = std::min(
          worst_margin, static_cast<long long>(3 * (3 - labels.size())) -
                            static_cast<long long>(d));
    }
  }
  CHECK(result.summary.synchronizing == sync);
  CHECK(result.summary.one_contracting == one_contracting);
  CHECK(result.summary.aperiodic == aperiodic);
  REQUIRE(result.summary.worst_margin);
  CHECK(*result.summary.worst_margin == worst_margin);
  CHECK(worst_margin >= 0);

  // Golden summary.
  CHECK(sync == 549);
  CHECK(one_contracting == 72);
  CHECK(aperiodic == 72);
  CHECK(result.summary.circular_certified == 72);
  CHECK(worst_margin == 0);
}

TEST_CASE("random survey is reproducible and thread-count independent") {
  SurveyConfig c;
  c.mode = SurveyConfig::Mode::kRandom;
  c.n = 6;
  c.k = 2;
  c.count = 100;
  c.seed = 7;
  c.threads = 1;
  auto one = run_survey(c);
  c.threads = 4;
  auto four = run_survey(c);
  REQUIRE(one.records.size() == 100);
  for (std::size_t i = 0; i < 100; ++i) {
    CHECK(one.records[i].id == four.records[i].id);
    CHECK(one.records[i].automaton == four.records[i].automaton);
    CHECK(one.records[i].shortest_sync == four.records[i].shortest_sync);
    CHECK(one.records[i].worst_margin == four.records[i].worst_margin);
    CHECK(GeneratorSpec::parse(one.records[i].id).build() ==
          parse_automaton(one.records[i].automaton));
  }
  // Golden summary.
  const auto& s = one.summary;
  CHECK(s.instances == 100);
  CHECK(s.skipped == 0);
  CHECK(s.synchronizing == 85);
  CHECK(s.one_contracting == 0);
  CHECK(s.aperiodic == 0);
  CHECK(s.violations == 0);
  REQUIRE(s.worst_margin);
  CHECK(*s.worst_margin == 0);
}

TEST_CASE("empty and over-capacity surveys") {
  SurveyConfig c;
  c.count = 0;
  auto r = run_survey(c);
  CHECK(r.records.empty());
  CHECK(r.summary.instances == 0);
  CHECK_FALSE(r.summary.worst_margin);

  c.n = 5;
  c.count = 3;
  c.limits.max_states = 4;
  r = run_survey(c);
  CHECK(r.summary.skipped == 3);
  CHECK(r.records[0].skipped);
  CHECK_FALSE(r.records[0].skip_reason.empty());

  SurveyConfig big;
  big.mode = SurveyConfig::Mode::kExhaustive;
  big.n = 7;
  big.k = 2;
  CHECK_THROWS_AS(run_survey(big), CapacityError);
}
