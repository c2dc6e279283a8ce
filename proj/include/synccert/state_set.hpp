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

#include <bit>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "synccert/errors.hpp"

namespace synccert {

/// Internal state index, 0-based. Files and reports use 1-based labels.
using State = std::uint32_t;

/// Subset of the states of an automaton with at most kMaxStates states,
/// stored as a single 64-bit mask. Bit i is state i (label i + 1).
class StateSet {
 public:
  static constexpr std::size_t kMaxStates = 64;

  constexpr StateSet() = default;
  static constexpr StateSet from_mask(std::uint64_t mask) {
    StateSet s;
    s.bits_ = mask;
    return s;
  }

  /// All of {0, ..., n-1}. Throws CapacityError when n > kMaxStates.
  static StateSet full(std::size_t n) {
    check_width(n);
    return from_mask(n == 64 ? ~std::uint64_t{0}
                             : (std::uint64_t{1} << n) - 1);
  }
  static StateSet singleton(State q) {
    check_width(std::size_t{q} + 1);
    return from_mask(std::uint64_t{1} << q);
  }

  static void check_width(std::size_t n) {
    if (n > kMaxStates) {
      throw CapacityError("state sets hold at most 64 states, got " +
                          std::to_string(n));
    }
  }

  constexpr std::uint64_t mask() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  constexpr bool contains(State q) const {
    return q < 64 && ((bits_ >> q) & 1u) != 0;
  }
  void insert(State q) {
    check_width(std::size_t{q} + 1);
    bits_ |= std::uint64_t{1} << q;
  }
  constexpr void erase(State q) {
    if (q < 64) bits_ &= ~(std::uint64_t{1} << q);
  }

  constexpr bool is_subset_of(StateSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr StateSet operator|(StateSet o) const {
    return from_mask(bits_ | o.bits_);
  }
  constexpr StateSet operator&(StateSet o) const {
    return from_mask(bits_ & o.bits_);
  }
  constexpr bool operator==(const StateSet&) const = default;
  constexpr auto operator<=>(const StateSet&) const = default;

  /// Calls f(q) for each member in ascending order.
  template <typename F>
  constexpr void for_each(F&& f) const {
    for (std::uint64_t m = bits_; m != 0; m &= m - 1) {
      f(static_cast<State>(std::countr_zero(m)));
    }
  }

  std::vector<State> members() const;

  /// "{1,3,4}" with 1-based labels; "{}" for the empty set.
  std::string to_string() const;

  /// Parses "1,3" or "{1,3}" (1-based, whitespace tolerant) for an
  /// automaton with n states. Throws PreconditionError on bad input.
  static StateSet parse(std::string_view text, std::size_t n);

 private:
  std::uint64_t bits_ = 0;
};

std::ostream& operator<<(std::ostream& os, StateSet s);

}  // namespace synccert
