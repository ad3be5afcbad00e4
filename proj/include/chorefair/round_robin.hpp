// Copyright 2026 The Authors.
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

// Round-robin picking: agents take turns choosing their least costly
// remaining chore.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chorefair/exhaustive.hpp"
#include "chorefair/fairness.hpp"

namespace chorefair {

struct Pick {
  int round = 0;  // 0-based
  Agent agent = 0;
  Chore chore = 0;

  friend bool operator==(const Pick&, const Pick&) = default;
};

struct RoundRobinTrace {
  std::vector<Pick> picks;
  int rounds = 0;
};

inline std::vector<Agent> identity_order(int n) {
  std::vector<Agent> order(static_cast<std::size_t>(n));
  for (Agent i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  return order;
}

inline void check_permutation(const std::vector<Agent>& order, int n) {
  if (static_cast<int>(order.size()) != n) throw InvalidInput("agent order must list every agent exactly once");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (Agent a : order) {
    if (a < 0 || a >= n || seen[static_cast<std::size_t>(a)]) {
      throw InvalidInput("agent order is not a permutation of the agents");
    }
    seen[static_cast<std::size_t>(a)] = true;
  }
}

// Ceiling of m/n: the number of rounds, the last one possibly partial.
inline int round_count(int m, int n) { return (m + n - 1) / n; }

inline std::pair<Allocation, RoundRobinTrace> round_robin_allocate(const Instance& inst,
                                                                   const std::vector<Agent>& order) {
  const int n = inst.n();
  const int m = inst.m();
  check_permutation(order, n);
  Allocation alloc = Allocation::empty(m, n);
  RoundRobinTrace trace;
  trace.rounds = round_count(m, n);
  ChoreSet remaining = ChoreSet::full(m);
  for (int t = 0; !remaining.empty(); ++t) {
    for (Agent i : order) {
      if (remaining.empty()) break;
      const CostOracle& oi = inst.oracle(i);
      std::optional<Chore> best;
      Rational best_cost;
      remaining.for_each([&](Chore c) {
        Rational v = oi.cost(c);
        if (!best || v < best_cost) {
          best = c;
          best_cost = std::move(v);
        }
      });
      remaining.erase(*best);
      alloc.give(i, *best);
      trace.picks.push_back({t, i, *best});
    }
  }
  return {std::move(alloc), std::move(trace)};
}

// 1 + (alpha - 1) / (rounds - 1); needs at least two rounds.
inline Rational round_robin_bound(const Rational& alpha, int m, int n) {
  const int rounds = round_count(m, n);
  if (rounds < 2) throw PreconditionError("approximation bound needs at least two rounds");
  return Rational(1) + (alpha - Rational(1)) / Rational(rounds - 1);
}

struct RoundRobinResult {
  Allocation allocation;
  RoundRobinTrace trace;
  bool in_scope = true;  // at least three rounds
  bool used_fallback = false;
  std::optional<FairnessReport> alpha_report;
  std::optional<FairnessReport> tefx_report;
};

// Round robin on an additive instance. The bound alpha defaults to the
// largest ratio bound among the agents. With fewer than three rounds an EFX
// allocation is searched for exhaustively unless `allow_fallback` is false.
inline RoundRobinResult round_robin_solve(const Instance& inst, std::optional<std::vector<Agent>> order = {},
                                          bool allow_fallback = true) {
  const int n = inst.n();
  const int m = inst.m();
  RoundRobinResult res;
  Rational alpha(1);
  bool additive = true;
  for (const auto& o : inst.oracles()) {
    additive = additive && o.is_additive();
    if (additive) alpha = max(alpha, ratio_bound(o));
  }
  res.in_scope = additive && round_count(m, n) >= 3;
  auto [alloc, trace] = round_robin_allocate(inst, order ? *order : identity_order(n));
  res.allocation = std::move(alloc);
  res.trace = std::move(trace);

  if (res.in_scope) {
    res.alpha_report = check_alpha_efx(res.allocation, inst, round_robin_bound(alpha, m, n));
    if (!res.alpha_report->verdict) {
      throw GuaranteeViolation("round-robin output misses its approximation bound: " + res.allocation.str());
    }
    if (alpha <= Rational(2)) {
      res.tefx_report = check_tefx(res.allocation, inst);
      if (!res.tefx_report->verdict) {
        throw GuaranteeViolation("round-robin output is not tEFX: " + res.allocation.str());
      }
    }
    return res;
  }
  if (allow_fallback) {
    if (auto found = exhaustive_search(inst, Criterion::efx())) {
      res.allocation = std::move(*found);
      res.used_fallback = true;
      res.trace = {};
    }
  }
  res.alpha_report = check_efx(res.allocation, inst);
  res.tefx_report = check_tefx(res.allocation, inst);
  return res;
}

}  // namespace chorefair
