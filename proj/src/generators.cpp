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

#include "synccert/generators.hpp"

#include <charconv>
#include <limits>
#include <random>

#include "fixture_data.hpp"

namespace synccert {

namespace {

// Uniform draw in [0, bound) by rejection; independent of the standard
// library's distribution implementations.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % bound + 1) % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x > limit);
  return x % bound;
}

std::size_t parse_number(std::string_view tok, std::string_view what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw PreconditionError("generator " + std::string(what) + " '" +
                            std::string(tok) + "' is not a number");
  }
  return static_cast<std::size_t>(v);
}

}  // namespace

Automaton cerny(std::size_t n) {
  if (n < 2) throw PreconditionError("cerny(n) needs n >= 2");
  std::vector<State> table(2 * n);
  for (std::size_t q = 0; q < n; ++q) {
    table[q] = static_cast<State>((q + 1) % n);
    table[n + q] = static_cast<State>(q);
  }
  table[n + n - 1] = 0;
  return Automaton(n, "ab", std::move(table));
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& f : detail::kFixtures) out.emplace_back(f.name);
  return out;
}

std::string_view fixture_text(std::string_view name) {
  for (const auto& f : detail::kFixtures) {
    if (f.name == name) return f.text;
  }
  throw PreconditionError("unknown fixture '" + std::string(name) + "'");
}

Automaton fixture(std::string_view name) {
  return parse_automaton(fixture_text(name));
}

Automaton circular(std::size_t n, std::size_t d, std::uint64_t seed) {
  if (n < 2) throw PreconditionError("circular(n, d) needs n >= 2");
  if (d < 1 || d >= n) {
    throw PreconditionError("circular(n, d) needs 1 <= d < n");
  }
  // Letter a restricted to states 2..n is a permutation pi; a(1) = 1 + d.
  std::vector<State> pi(n);
  for (std::size_t q = 0; q < n; ++q) pi[q] = static_cast<State>(q);
  if (seed != 0) {
    std::mt19937_64 rng(seed);
    for (std::size_t i = n - 1; i > 1; --i) {
      std::size_t j = 1 + uniform_below(rng, i);  // j in [1, i]
      std::swap(pi[i], pi[j]);
    }
  }
  std::vector<State> table(2 * n);
  for (std::size_t q = 0; q < n; ++q) table[q] = pi[q];
  table[0] = static_cast<State>(d);
  for (std::size_t q = 0; q < n; ++q) {
    table[n + q] = static_cast<State>((q + 1) % n);
  }
  return Automaton(n, "ab", std::move(table));
}

std::string default_alphabet(std::size_t k) {
  static constexpr std::string_view kLetters =
      "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";
  if (k == 0 || k > kLetters.size()) {
    throw PreconditionError("alphabet size must be in 1.." +
                            std::to_string(kLetters.size()));
  }
  return std::string(kLetters.substr(0, k));
}

Automaton random_automaton(std::size_t n, std::size_t k, std::uint64_t seed) {
  if (n == 0) throw PreconditionError("random automaton needs n >= 1");
  std::string alphabet = default_alphabet(k);
  std::mt19937_64 rng(seed);
  std::vector<State> table(n * k);
  for (auto& t : table) t = static_cast<State>(uniform_below(rng, n));
  return Automaton(n, std::move(alphabet), std::move(table));
}

GeneratorSpec GeneratorSpec::parse(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (true) {
    auto colon = text.find(':', pos);
    parts.push_back(text.substr(pos, colon - pos));
    if (colon == std::string_view::npos) break;
    pos = colon + 1;
  }
  GeneratorSpec spec;
  const auto& family = parts[0];
  auto want = [&](std::size_t lo, std::size_t hi) {
    if (parts.size() < lo + 1 || parts.size() > hi + 1) {
      throw PreconditionError("bad generator spec '" + std::string(text) + "'");
    }
  };
  if (family == "cerny") {
    want(1, 1);
    spec.family = Family::kCerny;
    spec.n = parse_number(parts[1], "n");
  } else if (family == "circular") {
    want(2, 3);
    spec.family = Family::kCircular;
    spec.n = parse_number(parts[1], "n");
    spec.d = parse_number(parts[2], "d");
    if (parts.size() == 4) spec.seed = parse_number(parts[3], "seed");
  } else if (family == "random") {
    want(3, 3);
    spec.family = Family::kRandom;
    spec.n = parse_number(parts[1], "n");
    spec.k = parse_number(parts[2], "k");
    spec.seed = parse_number(parts[3], "seed");
  } else if (family == "fixture") {
    want(1, 1);
    spec.family = Family::kFixture;
    spec.fixture = std::string(parts[1]);
  } else {
    throw PreconditionError("unknown generator family '" + std::string(family) +
                            "'");
  }
  spec.validate();
  return spec;
}

void GeneratorSpec::validate() const {
  switch (family) {
    case Family::kCerny:
      if (n < 2) throw PreconditionError("cerny needs n >= 2");
      break;
    case Family::kCircular:
      if (n < 2 || d < 1 || d >= n) {
        throw PreconditionError("circular needs n >= 2 and 1 <= d < n");
      }
      break;
    case Family::kRandom:
      if (n < 1) throw PreconditionError("random needs n >= 1");
      default_alphabet(k);
      break;
    case Family::kFixture:
      fixture_text(fixture);
      break;
  }
}

Automaton GeneratorSpec::build() const {
  validate();
  switch (family) {
    case Family::kCerny: return cerny(n);
    case Family::kCircular: return circular(n, d, seed);
    case Family::kRandom: return random_automaton(n, k, seed);
    case Family::kFixture: return synccert::fixture(fixture);
  }
  throw InvariantError("unhandled generator family");
}

std::string GeneratorSpec::to_string() const {
  switch (family) {
    case Family::kCerny: return "cerny:" + std::to_string(n);
    case Family::kCircular:
      return "circular:" + std::to_string(n) + ":" + std::to_string(d) + ":" +
             std::to_string(seed);
    case Family::kRandom:
      return "random:" + std::to_string(n) + ":" + std::to_string(k) + ":" +
             std::to_string(seed);
    case Family::kFixture: return "fixture:" + fixture;
  }
  return {};
}

}  // namespace synccert
