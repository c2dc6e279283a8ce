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

#include "synccert/automaton.hpp"
#include "synccert/generators.hpp"
#include "test_support.hpp"

using namespace synccert;
using synccert::testing::Labels;

namespace {

constexpr std::string_view kC4 =
    "states 4\n"
    "alphabet a b\n"
    "a 2 3 4 1\n"
    "b 1 2 3 1\n";

StateSet S(std::string_view labels, std::size_t n) {
  return StateSet::parse(labels, n);
}

ParseErrorKind parse_kind(std::string_view text, std::size_t* line = nullptr) {
  try {
    parse_automaton(text);
  } catch (const ParseError& e) {
    if (line) *line = e.line();
    return e.kind();
  }
  FAIL("expected a parse error");
  return ParseErrorKind::kTrailingContent;
}

}  // namespace

TEST_CASE("parse the C4 file") {
  auto a = parse_automaton(kC4);
  CHECK(a.size() == 4);
  CHECK(a.alphabet() == "ab");
  CHECK(a.next(3, 0) == 0);  // delta(4, a) = 1
  CHECK(a.next(3, 1) == 0);  // delta(4, b) = 1
  CHECK(a.next(0, 0) == 1);
}

TEST_CASE("smallest legal automaton") {
  auto a = parse_automaton("states 1\nalphabet a\na 1\n");
  CHECK(a.size() == 1);
  CHECK(a.next(0, 0) == 0);
  CHECK(serialize_automaton(a) == "states 1\nalphabet a\na 1\n");
}

TEST_CASE("parse tolerates comments, blank lines and row order") {
  auto a = parse_automaton(
      "# sample\n\n  states 4  \n"
      "alphabet a b c   # three letters\n"
      "c 3 2 3 4\n"
      "\n"
      "a 2 1 4 3\r\n"
      "b 4 3 2 1");
  CHECK(a.next(0, 2) == 2);  // delta(1, c) = 3
  CHECK(serialize_automaton(a) ==
        "states 4\nalphabet a b c\na 2 1 4 3\nb 4 3 2 1\nc 3 2 3 4\n");
}

TEST_CASE("parse errors name the kind and the line") {
  std::size_t line = 0;
  CHECK(parse_kind("state 4\n", &line) == ParseErrorKind::kMalformedHeader);
  CHECK(line == 1);
  CHECK(parse_kind("states x\n") == ParseErrorKind::kMalformedHeader);
  CHECK(parse_kind("states 0\n") == ParseErrorKind::kMalformedHeader);
  CHECK(parse_kind("") == ParseErrorKind::kMalformedHeader);
  CHECK(parse_kind("states 2\nletters a\n", &line) ==
        ParseErrorKind::kMalformedAlphabet);
  CHECK(line == 2);
  CHECK(parse_kind("states 2\nalphabet\n") == ParseErrorKind::kMalformedAlphabet);
  CHECK(parse_kind("states 2\n") == ParseErrorKind::kMalformedAlphabet);
  CHECK(parse_kind("# c\nstates 2\nalphabet a a\n", &line) ==
        ParseErrorKind::kDuplicateLetter);
  CHECK(line == 3);
  CHECK(parse_kind("states 2\nalphabet ab\n") == ParseErrorKind::kBadLetter);
  CHECK(parse_kind("states 2\nalphabet a\nab 1 2\n") == ParseErrorKind::kBadLetter);
  CHECK(parse_kind("states 2\nalphabet a\nb 1 2\n") ==
        ParseErrorKind::kUnknownLetter);
  CHECK(parse_kind("states 2\nalphabet a\na 1 2\na 2 1\n", &line) ==
        ParseErrorKind::kDuplicateRow);
  CHECK(line == 4);
  CHECK(parse_kind("states 2\nalphabet a b\na 1 2\n") == ParseErrorKind::kMissingRow);
  CHECK(parse_kind("states 2\nalphabet a\na 1\n") == ParseErrorKind::kRowLength);
  CHECK(parse_kind("states 2\nalphabet a\na 1 2 1\n") == ParseErrorKind::kRowLength);
  CHECK(parse_kind("states 2\nalphabet a\na 1 z\n") == ParseErrorKind::kBadTarget);
  CHECK(parse_kind("states 2\nalphabet a\na 1 3\n", &line) ==
        ParseErrorKind::kTargetOutOfRange);
  CHECK(line == 3);
  CHECK(parse_kind("states 2\nalphabet a\na 0 1\n") ==
        ParseErrorKind::kTargetOutOfRange);
}

TEST_CASE("serialize then parse is the identity") {
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    std::size_t n = 1 + rng() % 9;
    std::size_t k = 1 + rng() % 4;
    auto a = testing::random_test_automaton(rng, n, k);
    auto text = serialize_automaton(a);
    CHECK(parse_automaton(text) == a);
    CHECK(serialize_automaton(parse_automaton(text)) == text);
  }
  CHECK(serialize_automaton(parse_automaton(kC4)) == kC4);
}

TEST_CASE("fig5 serializes with rows for a, b, c") {
  CHECK(serialize_automaton(fixture("fig5")) ==
        "states 4\nalphabet a b c\na 2 2 3 4\nb 2 4 3 1\nc 4 3 2 1\n");
}

TEST_CASE("apply_word examples") {
  auto c4 = parse_automaton(kC4);
  CHECK(apply_word(c4, c4.all_states(), "b") == S("1,2,3", 4));
  CHECK(apply_word(c4, S("2,4", 4), "") == S("2,4", 4));
  CHECK(apply_word(c4, StateSet{}, "abab").empty());
  auto fig3 = fixture("fig3");
  CHECK(apply_word(fig3, fig3.all_states(), "ca") == S("1,3,4", 4));
  CHECK_THROWS_AS(apply_word(c4, c4.all_states(), "abx"), UnknownLetterError);
}

TEST_CASE("preimage examples") {
  auto c4 = parse_automaton(kC4);
  // Oracle values: evaluate every state by hand through the raw table.
  Labels expect;
  for (int q = 1; q <= 4; ++q) {
    int t = testing::naive_run(c4, q, "baaa");
    if (t == 1 || t == 4) expect.insert(q);
  }
  CHECK(expect == Labels{1, 2, 4});
  CHECK(preimage(c4, S("1,4", 4), "baaa") == S("1,2,4", 4));
  CHECK(preimage(c4, S("1", 4), "b") == S("1,4", 4));
  CHECK(preimage(c4, c4.all_states(), "abba") == c4.all_states());
  CHECK(preimage(c4, S("2", 4), "") == S("2", 4));
  CHECK_THROWS_AS(preimage(c4, S("2", 4), "c"), UnknownLetterError);
}

TEST_CASE("transformation_of examples") {
  auto fig3 = fixture("fig3");
  auto t = transformation_of(fig3, "c");
  CHECK(t.rank() == 3);
  CHECK(t.indegree(0) == 0);
  CHECK(t.indegree(2) == 2);

  auto c4 = parse_automaton(kC4);
  auto id = transformation_of(c4, "");
  CHECK(id == Transformation::identity(4));
  CHECK(id.rank() == 4);
  for (State q = 0; q < 4; ++q) CHECK(id.indegree(q) == 1);

  auto sync = transformation_of(c4, "baaabaaab");
  CHECK(sync.rank() == 1);
  CHECK(sync.image() == S("1", 4));
  CHECK_THROWS_AS(transformation_of(c4, "z"), UnknownLetterError);
}

TEST_CASE("deficient word indegree profile") {
  auto c4 = parse_automaton(kC4);
  auto t = transformation_of(c4, "baa");
  std::vector<std::size_t> counts(3, 0);
  for (auto d : t.indegrees()) ++counts.at(d);
  CHECK(counts[0] == 1);
  CHECK(counts[2] == 1);
  CHECK(counts[1] == 2);
}

TEST_CASE("state sets") {
  CHECK(S("{1,3}", 4).to_string() == "{1,3}");
  CHECK(S(" 3 , 1 ", 4).members() == std::vector<State>{0, 2});
  CHECK(StateSet{}.to_string() == "{}");
  CHECK(StateSet::full(64).size() == 64);
  CHECK_THROWS_AS(S("5", 4), PreconditionError);
  CHECK_THROWS_AS(S("0", 4), PreconditionError);
  CHECK_THROWS_AS(S("1,x", 4), PreconditionError);
  CHECK_THROWS_AS(StateSet::full(65), CapacityError);
}

TEST_CASE("set operations above 64 states are a capacity error") {
  std::vector<State> table(65);
  for (State q = 0; q < 65; ++q) table[q] = (q + 1) % 65;
  Automaton big(65, "a", table);
  CHECK(transformation_of(big, "aa").rank() == 65);
  CHECK_THROWS_AS(apply_word(big, StateSet{}, "a"), CapacityError);
  CHECK_THROWS_AS(preimage(big, StateSet{}, "a"), CapacityError);
  CHECK_THROWS_AS(SubsetImage{big}, CapacityError);
}

TEST_CASE("constructor rejects broken tables") {
  CHECK_THROWS_AS(Automaton(0, "a", {}), PreconditionError);
  CHECK_THROWS_AS(Automaton(1, "", {}), PreconditionError);
  CHECK_THROWS_AS(Automaton(2, "aa", {0, 0, 0, 0}), PreconditionError);
  CHECK_THROWS_AS(Automaton(2, "a", {0}), PreconditionError);
  CHECK_THROWS_AS(Automaton(2, "a", {0, 2}), PreconditionError);
}

TEST_CASE("SubsetImage agrees with apply_word") {
  std::mt19937 rng(5);
  for (int i = 0; i < 300; ++i) {
    std::size_t n = 1 + rng() % 64;
    auto a = testing::random_test_automaton(rng, n, 2);
    SubsetImage img(a);
    auto s = testing::random_subset(rng, n);
    CHECK(img.apply(s, 0) == apply_word(a, s, "a"));
    CHECK(img.apply(s, 1) == apply_word(a, s, "b"));
  }
}

// Transition-function laws on random triples.
TEST_CASE("subset dynamics laws") {
  std::mt19937 rng(2026);
  for (int i = 0; i < 3000; ++i) {
    std::size_t n = 1 + rng() % 10;
    std::size_t k = 1 + rng() % 3;
    auto a = testing::random_test_automaton(rng, n, k);
    auto s2 = testing::random_subset(rng, n);
    auto s1 = s2 & testing::random_subset(rng, n);
    auto other = testing::random_subset(rng, n);
    auto u = testing::random_word(rng, a.alphabet(), 6);
    auto v = testing::random_word(rng, a.alphabet(), 6);

    auto img2 = apply_word(a, s2, u);
    CHECK(testing::labels_of(img2) == testing::naive_image(a, testing::labels_of(s2), u));
    if (!s2.empty()) {
      CHECK(img2.size() >= 1);
      CHECK(img2.size() <= s2.size());
    }
    auto t = transformation_of(a, u);
    std::size_t sum = 0;
    for (auto d : t.indegrees()) sum += d;
    CHECK(sum == n);

    auto img1 = apply_word(a, s1, u);
    CHECK(s2.size() - img2.size() >= s1.size() - img1.size());
    CHECK((apply_word(a, s1, u) | apply_word(a, other, u)) ==
          apply_word(a, s1 | other, u));

    auto pre = preimage(a, other, u);
    CHECK(apply_word(a, pre, u).is_subset_of(other));
    CHECK(s2.is_subset_of(preimage(a, apply_word(a, s2, u), u)));

    CHECK(apply_word(a, s2, u + v) == apply_word(a, apply_word(a, s2, u), v));
    CHECK(transformation_of(a, u + v) ==
          transformation_of(a, u).then(transformation_of(a, v)));
  }
}
