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

#include "synccert/oracle.hpp"

#include <algorithm>

namespace synccert {

ReachabilityTable::ReachabilityTable(const Automaton& a,
                                     const OracleLimits& limits)
    : n_(a.size()), alphabet_(a.alphabet()) {
  const std::size_t cap = std::min(limits.max_states, kOracleHardLimit);
  if (n_ > cap) {
    throw CapacityError("power-automaton table limited to " +
                        std::to_string(cap) + " states, automaton has " +
                        std::to_string(n_));
  }
  if (a.alphabet_size() > 256) {
    throw CapacityError("oracle supports at most 256 letters");
  }
  const std::uint64_t count = std::uint64_t{1} << n_;
  dist_.assign(count, -1);
  parent_.assign(count, 0);
  letter_.assign(count, 0);

  SubsetImage image(a);
  const std::uint32_t start = static_cast<std::uint32_t>(count - 1);
  std::vector<std::uint32_t> queue;
  queue.push_back(start);
  dist_[start] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint32_t u = queue[head];
    for (std::size_t l = 0; l < a.alphabet_size(); ++l) {
      auto v = static_cast<std::uint32_t>(
          image.apply(StateSet::from_mask(u), l).mask());
      if (dist_[v] >= 0) continue;
      dist_[v] = dist_[u] + 1;
      parent_[v] = u;
      letter_[v] = static_cast<std::uint8_t>(l);
      queue.push_back(v);
    }
  }
  reachable_count_ = queue.size();
}

std::optional<std::size_t> ReachabilityTable::distance(StateSet s) const {
  if (s.mask() >= dist_.size() || dist_[s.mask()] < 0) return std::nullopt;
  return static_cast<std::size_t>(dist_[s.mask()]);
}

std::optional<Word> ReachabilityTable::witness(StateSet s) const {
  auto d = distance(s);
  if (!d) return std::nullopt;
  Word w;
  w.reserve(*d);
  for (std::uint64_t m = s.mask(); dist_[m] > 0; m = parent_[m]) {
    w += alphabet_[letter_[m]];
  }
  std::reverse(w.begin(), w.end());
  return w;
}

std::vector<StateSet> ReachabilityTable::unreachable() const {
  std::vector<StateSet> out;
  for (std::uint64_t m = 1; m < dist_.size(); ++m) {
    if (dist_[m] < 0) out.push_back(StateSet::from_mask(m));
  }
  return out;
}

std::optional<Word> shortest_sync_word(const ReachabilityTable& table) {
  std::optional<StateSet> best;
  std::size_t best_dist = 0;
  for (State q = 0; q < table.states(); ++q) {
    auto s = StateSet::singleton(q);
    auto d = table.distance(s);
    if (!d) continue;
    // Same length: keep the shortlex-smaller witness.
    if (!best || *d < best_dist ||
        (*d == best_dist && *table.witness(s) < *table.witness(*best))) {
      best = s;
      best_dist = *d;
    }
  }
  if (!best) return std::nullopt;
  return table.witness(*best);
}

std::optional<Word> shortest_sync_word(const Automaton& a,
                                       const OracleLimits& limits) {
  return shortest_sync_word(ReachabilityTable(a, limits));
}

bool is_synchronizing(const Automaton& a) {
  const std::size_t n = a.size();
  if (n == 1) return true;
  // Backward BFS on unordered pairs from the pairs a letter merges.
  auto pair_id = [n](State p, State q) {
    if (p > q) std::swap(p, q);
    return static_cast<std::size_t>(p) * n + q;
  };
  std::vector<std::vector<std::vector<State>>> inverse(
      a.alphabet_size(), std::vector<std::vector<State>>(n));
  for (std::size_t l = 0; l < a.alphabet_size(); ++l) {
    for (State q = 0; q < n; ++q) inverse[l][a.next(q, l)].push_back(q);
  }

  std::vector<bool> good(n * n, false);
  std::vector<std::pair<State, State>> queue;
  for (std::size_t l = 0; l < a.alphabet_size(); ++l) {
    for (State t = 0; t < n; ++t) {
      const auto& pre = inverse[l][t];
      for (std::size_t i = 0; i < pre.size(); ++i) {
        for (std::size_t j = i + 1; j < pre.size(); ++j) {
          auto id = pair_id(pre[i], pre[j]);
          if (good[id]) continue;
          good[id] = true;
          queue.emplace_back(pre[i], pre[j]);
        }
      }
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    auto [r, s] = queue[head];
    for (std::size_t l = 0; l < a.alphabet_size(); ++l) {
      for (State p : inverse[l][r]) {
        for (State q : inverse[l][s]) {
          if (p == q) continue;
          auto id = pair_id(p, q);
          if (good[id]) continue;
          good[id] = true;
          queue.emplace_back(p, q);
        }
      }
    }
  }
  return queue.size() == n * (n - 1) / 2;
}

Conjecture2Report conjecture2_check(const ReachabilityTable& table,
                                    std::string id) {
  const std::size_t n = table.states();
  Conjecture2Report report;
  report.id = std::move(id);
  report.n = n;
  report.sizes.resize(n);
  for (std::size_t k = 1; k <= n; ++k) {
    auto& s = report.sizes[k - 1];
    s.k = k;
    s.bound = n * (n - k);
    // C(n, k) without overflow for n <= 32.
    std::uint64_t c = 1;
    for (std::size_t i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    s.subsets = static_cast<std::size_t>(c);
  }
  table.for_each_reachable([&](StateSet s, std::size_t d) {
    if (s.empty()) return;
    auto& summary = report.sizes[s.size() - 1];
    ++summary.reachable;
    if (!summary.worst || d > *summary.worst) summary.worst = d;
    if (d > summary.bound) {
      report.violations.push_back({s, d, summary.bound, *table.witness(s)});
    }
  });
  for (auto& s : report.sizes) {
    if (s.worst) {
      s.margin = static_cast<long long>(s.bound) - static_cast<long long>(*s.worst);
    }
  }
  return report;
}

Conjecture2Report conjecture2_check(const Automaton& a, std::string id,
                                    const OracleLimits& limits) {
  return conjecture2_check(ReachabilityTable(a, limits), std::move(id));
}

}  // namespace synccert
