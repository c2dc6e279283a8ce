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
#include <string>
#include <string_view>
#include <vector>

#include "synccert/automaton.hpp"

namespace synccert {

/// Cerny automaton C_n: a rotates i -> i+1 (mod n), b sends n to 1 and fixes
/// the rest. Requires n >= 2.
Automaton cerny(std::size_t n);

/// Names accepted by fixture(): fig1, fig3, fig4, fig5.
std::vector<std::string> fixture_names();

/// Bundled example automata; their .dfa files under fixtures/ are compiled in.
Automaton fixture(std::string_view name);

/// Source text of a bundled fixture file.
std::string_view fixture_text(std::string_view name);

/// Circular automaton over {a, b}: b is the n-cycle i -> i+1, a excludes
/// state 1 and contracts at state 1 + d. With seed 0, a fixes every state
/// other than 1; otherwise a permutes states 2..n by a seeded shuffle, which
/// leaves the excluded and contracting states unchanged. Requires n >= 2 and
/// 1 <= d < n.
Automaton circular(std::size_t n, std::size_t d, std::uint64_t seed = 0);

/// Letters used for generated alphabets: a-z, then A-Z, then 0-9.
std::string default_alphabet(std::size_t k);

/// Uniform random automaton. Draws come from std::mt19937_64 (whose output
/// sequence is fixed by the C++ standard) seeded with `seed`, reduced to a
/// range by rejection sampling, filled letter by letter then state by state.
Automaton random_automaton(std::size_t n, std::size_t k, std::uint64_t seed);

/// Generator description, written "cerny:N", "circular:N:D[:SEED]",
/// "random:N:K:SEED" or "fixture:NAME".
struct GeneratorSpec {
  enum class Family { kCerny, kCircular, kRandom, kFixture };
  Family family = Family::kCerny;
  std::size_t n = 0;
  std::size_t k = 2;
  std::size_t d = 1;
  std::uint64_t seed = 0;
  std::string fixture;

  /// Throws PreconditionError on unknown families or invalid parameters.
  static GeneratorSpec parse(std::string_view text);
  void validate() const;
  Automaton build() const;
  std::string to_string() const;
};

}  // namespace synccert
