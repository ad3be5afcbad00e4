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

// Transfer-EFX allocations when agents fall into at most three groups: one
// with a shared general monotone cost, one with a shared additive cost of
// ratio at most 2, and a single agent with its own monotone cost.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chorefair/fairness.hpp"

namespace chorefair {

inline bool all_efx_feasible(const std::vector<ChoreSet>& bundles, const CostOracle& oracle) {
  for (std::size_t p = 0; p < bundles.size(); ++p) {
    if (!efx_feasible(bundles, p, oracle)) return false;
  }
  return true;
}

namespace detail {

inline std::size_t argmin_cost(const std::vector<ChoreSet>& bundles, const CostOracle& oracle, std::size_t lo,
                               std::size_t hi) {
  std::size_t best = lo;
  Rational best_cost = oracle.cost(bundles[lo]);
  for (std::size_t p = lo + 1; p < hi; ++p) {
    Rational v = oracle.cost(bundles[p]);
    if (v < best_cost) {
      best = p;
      best_cost = std::move(v);
    }
  }
  return best;
}

// Depth-first search over set partitions into at most `count` blocks, chores
// in descending singleton order. A partial block whose removal cost already
// exceeds another block plus every unplaced chore is pruned.
class PartitionSearch {
 public:
  PartitionSearch(const CostOracle& oracle, int count, std::uint64_t node_budget)
      : oracle_(oracle), count_(count), budget_(node_budget), order_(top_chore_order(oracle)) {}

  std::optional<std::vector<ChoreSet>> run() {
    bundles_.assign(static_cast<std::size_t>(count_), ChoreSet());
    if (dfs(0, 0)) return bundles_;
    return std::nullopt;
  }

 private:
  bool pruned(std::size_t k) const {
    ChoreSet rest;
    for (std::size_t t = k; t < order_.size(); ++t) rest.insert(order_[t]);
    for (std::size_t a = 0; a < bundles_.size(); ++a) {
      const Rational worst = max_removal_cost(oracle_, bundles_[a]);
      if (worst.is_zero()) continue;
      for (std::size_t b = 0; b < bundles_.size(); ++b) {
        if (b != a && oracle_.cost(bundles_[b] | rest) < worst) return true;
      }
    }
    return false;
  }

  bool dfs(std::size_t k, int used) {
    if (++nodes_ > budget_) throw EnumerationLimit("identical-cost EFX search exceeded its node budget");
    if (pruned(k)) return false;
    if (k == order_.size()) return all_efx_feasible(bundles_, oracle_);
    const Chore c = order_[k];
    const int limit = std::min(used + 1, count_);
    for (int b = 0; b < limit; ++b) {
      auto& bundle = bundles_[static_cast<std::size_t>(b)];
      bundle.insert(c);
      if (dfs(k + 1, std::max(used, b + 1))) return true;
      bundle.erase(c);
    }
    return false;
  }

  const CostOracle& oracle_;
  int count_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<Chore> order_;
  std::vector<ChoreSet> bundles_;
};

}  // namespace detail

struct IdenticalEfxResult {
  std::vector<ChoreSet> bundles;
  // "greedy", "repair" or "search".
  std::string method;
};

// Partition of all m chores into `count` bundles, each EFX-feasible under the
// single oracle. Greedy seeding, then local repair, then a pruned search.
inline IdenticalEfxResult identical_cost_efx_detailed(int m, int count, const CostOracle& oracle) {
  if (count < 1) throw InvalidInput("bundle count must be positive");
  if (oracle.chore_count() != m) throw InvalidInput("oracle chore count differs from m");
  IdenticalEfxResult res;
  auto& bundles = res.bundles;
  bundles.assign(static_cast<std::size_t>(count), ChoreSet());
  for (Chore c : top_chore_order(oracle)) {
    bundles[detail::argmin_cost(bundles, oracle, 0, bundles.size())].insert(c);
  }
  res.method = "greedy";

  const std::uint64_t budget = static_cast<std::uint64_t>(m) * static_cast<std::uint64_t>(m) *
                               static_cast<std::uint64_t>(count);
  for (std::uint64_t step = 0; step < budget; ++step) {
    std::optional<std::size_t> bad;
    for (std::size_t p = 0; p < bundles.size() && !bad; ++p) {
      if (!efx_feasible(bundles, p, oracle)) bad = p;
    }
    if (!bad) return res;
    res.method = "repair";
    // The chore whose removal leaves the most costly remainder.
    const ChoreSet from = bundles[*bad];
    Chore move = from.to_vector().front();
    Rational worst = oracle.cost(from.without(move));
    from.for_each([&](Chore c) {
      Rational v = oracle.cost(from.without(c));
      if (worst < v) {
        move = c;
        worst = std::move(v);
      }
    });
    const std::size_t to = detail::argmin_cost(bundles, oracle, 0, bundles.size());
    bundles[*bad].erase(move);
    bundles[to].insert(move);
  }
  if (all_efx_feasible(bundles, oracle)) return res;

  detail::PartitionSearch search(oracle, count, max_enum_override().value_or(10'000'000));
  auto found = search.run();
  if (!found) throw GuaranteeViolation("no EFX partition exists for identical costs; oracle is not monotone");
  res.bundles = std::move(*found);
  res.method = "search";
  if (!all_efx_feasible(res.bundles, oracle)) throw GuaranteeViolation("identical-cost EFX output failed verification");
  return res;
}

inline std::vector<ChoreSet> identical_cost_efx(int m, int count, const CostOracle& oracle) {
  return identical_cost_efx_detailed(m, count, oracle).bundles;
}

// One move of the two-group loop, at recursion level k (positions are 0-based).
struct TwoGroupStep {
  int k = 0;
  std::size_t from = 0;
  std::size_t to = 0;
  Chore chore = 0;
  std::uint64_t phi_before = 0;
  std::uint64_t phi_after = 0;
  bool invariant1 = true;  // positions 0..n-k EFX-feasible under C1
  bool invariant2 = true;  // positions n-k+1..n-1 tEFX-feasible under C2
};

struct TwoGroupTrace {
  std::vector<TwoGroupStep> steps;
  std::string base_method;
};

namespace detail {

inline std::uint64_t phi(const std::vector<ChoreSet>& x, std::size_t pivot) {
  std::uint64_t s = 0;
  for (std::size_t p = 0; p <= pivot; ++p) s += static_cast<std::uint64_t>(x[p].size());
  return s;
}

inline bool two_group_properties(const std::vector<ChoreSet>& x, std::size_t pivot, const CostOracle& c1,
                                 const CostOracle& c2) {
  for (std::size_t p = 0; p <= pivot; ++p) {
    if (!efx_feasible(x, p, c1)) return false;
  }
  for (std::size_t p = pivot; p < x.size(); ++p) {
    if (!tefx_feasible(x, p, c2)) return false;
  }
  return true;
}

inline std::vector<ChoreSet> two_group_rec(int m, int n, const CostOracle& c1, const CostOracle& c2, int k,
                                           TwoGroupTrace& trace) {
  const auto nn = static_cast<std::size_t>(n);
  if (k == 1) {
    auto base = identical_cost_efx_detailed(m, n, c1);
    trace.base_method = base.method;
    auto x = std::move(base.bundles);
    std::swap(x[argmin_cost(x, c2, 0, nn)], x[nn - 1]);
    return x;
  }
  auto x = two_group_rec(m, n, c1, c2, k - 1, trace);
  const std::size_t pivot = nn - static_cast<std::size_t>(k);  // position n-k+1, 0-based
  for (;;) {
    std::optional<std::size_t> feasible;
    for (std::size_t p = 0; p <= pivot && !feasible; ++p) {
      if (tefx_feasible(x, p, c2)) feasible = p;
    }
    if (feasible) {
      std::swap(x[*feasible], x[pivot]);
      return x;
    }
    TwoGroupStep step;
    step.k = k;
    step.phi_before = phi(x, pivot);
    step.to = argmin_cost(x, c2, pivot + 1, nn);
    // Largest removal cost under C1 among the first group's positions;
    // ties go to the lowest chore, then the lowest position.
    std::optional<Rational> best;
    for (std::size_t p = 0; p <= pivot; ++p) {
      x[p].for_each([&](Chore c) {
        Rational v = c1.cost(x[p].without(c));
        if (!best || *best < v || (*best == v && c < step.chore)) {
          best = std::move(v);
          step.from = p;
          step.chore = c;
        }
      });
    }
    if (!best) throw GuaranteeViolation("two-group loop found no chore to move");
    x[step.from].erase(step.chore);
    x[step.to].insert(step.chore);
    step.phi_after = phi(x, pivot);
    for (std::size_t p = 0; p <= pivot; ++p) step.invariant1 = step.invariant1 && efx_feasible(x, p, c1);
    for (std::size_t p = pivot + 1; p < nn; ++p) step.invariant2 = step.invariant2 && tefx_feasible(x, p, c2);
    const bool drop_ok = step.phi_after + 1 == step.phi_before;
    trace.steps.push_back(step);
    if (!step.invariant1 || !step.invariant2 || !drop_ok) {
      throw GuaranteeViolation("two-group loop invariant broken at level " + std::to_string(k));
    }
  }
}

}  // namespace detail

struct TwoGroupResult {
  std::vector<ChoreSet> bundles;
  TwoGroupTrace trace;
};

// Bundles 0..n-k EFX-feasible under C1 and bundles n-k..n-1 tEFX-feasible
// under C2, where C2 is additive with ratio at most 2.
inline TwoGroupResult tefx_two_group_detailed(int m, int n, const CostOracle& c1, const CostOracle& c2, int k) {
  if (n < 1) throw InvalidInput("need at least one agent");
  if (k < 1 || k > n) throw InvalidInput("k must lie in [1, n]");
  if (c1.chore_count() != m || c2.chore_count() != m) throw InvalidInput("oracle chore count differs from m");
  if (!c2.is_additive()) throw PreconditionError("second cost function must be additive");
  if (Rational(2) < ratio_bound(c2)) throw PreconditionError("second cost function has ratio bound above 2");
  TwoGroupResult res;
  res.bundles = detail::two_group_rec(m, n, c1, c2, k, res.trace);
  if (!detail::two_group_properties(res.bundles, static_cast<std::size_t>(n - k), c1, c2)) {
    throw GuaranteeViolation("two-group output fails its feasibility properties");
  }
  return res;
}

inline Allocation tefx_two_group(int m, int n, const CostOracle& c1, const CostOracle& c2, int k) {
  return Allocation(m, tefx_two_group_detailed(m, n, c1, c2, k).bundles);
}

struct GroupSpec {
  std::vector<Agent> group1;
  std::vector<Agent> group2;
  std::vector<Agent> group3;  // at most one agent
};

// Consecutive groups of the given sizes: agents 0..s1-1, then s2, then s3.
inline GroupSpec contiguous_groups(const std::vector<int>& sizes) {
  GroupSpec g;
  std::vector<Agent>* groups[3] = {&g.group1, &g.group2, &g.group3};
  Agent next = 0;
  for (std::size_t k = 0; k < sizes.size() && k < 3; ++k) {
    for (int a = 0; a < sizes[k]; ++a) groups[k]->push_back(next++);
  }
  return g;
}

inline void validate_groups(const Instance& inst, const GroupSpec& g) {
  std::vector<int> seen(static_cast<std::size_t>(inst.n()), 0);
  for (const auto* grp : {&g.group1, &g.group2, &g.group3}) {
    for (Agent a : *grp) {
      if (a < 0 || a >= inst.n()) throw InvalidInput("group member out of range");
      if (seen[static_cast<std::size_t>(a)]++) throw InvalidInput("agent listed in two groups");
    }
    for (Agent a : *grp) {
      if (!(inst.oracle(a) == inst.oracle(grp->front()))) {
        throw PreconditionError("agents " + std::to_string(grp->front() + 1) + " and " + std::to_string(a + 1) +
                                " share a group but not a cost function");
      }
    }
  }
  for (int s : seen) {
    if (s == 0) throw InvalidInput("groups do not cover every agent");
  }
  if (g.group3.size() > 1) throw PreconditionError("group 3 holds at most one agent");
  if (!g.group2.empty()) {
    const CostOracle& c2 = inst.oracle(g.group2.front());
    if (!c2.is_additive()) throw PreconditionError("group 2 cost function must be additive");
    if (Rational(2) < ratio_bound(c2)) throw PreconditionError("group 2 cost function has ratio bound above 2");
  }
}

struct ThreeGroupResult {
  Allocation allocation;
  TwoGroupTrace trace;
  std::vector<ChoreSet> positions;     // bundles in positional order
  std::optional<std::size_t> chosen;  // position taken by the group-3 agent
};

inline ThreeGroupResult tefx_three_group_detailed(const Instance& inst, const GroupSpec& g) {
  validate_groups(inst, g);
  const int n = inst.n();
  const int m = inst.m();
  const int ell = static_cast<int>(g.group2.size());
  const bool has3 = !g.group3.empty();
  ThreeGroupResult res;

  if (ell == 0) {
    const CostOracle& c1 = inst.oracle(g.group1.empty() ? g.group3.front() : g.group1.front());
    auto base = identical_cost_efx_detailed(m, n, c1);
    res.trace.base_method = base.method;
    res.positions = std::move(base.bundles);
  } else {
    const CostOracle& c2 = inst.oracle(g.group2.front());
    // With no first group the second group's cost stands in for it.
    const CostOracle& c1 = g.group1.empty() ? c2 : inst.oracle(g.group1.front());
    auto two = tefx_two_group_detailed(m, n, c1, c2, has3 ? ell + 1 : ell);
    res.positions = std::move(two.bundles);
    res.trace = std::move(two.trace);
  }

  const auto& x = res.positions;
  std::vector<ChoreSet> out(static_cast<std::size_t>(n));
  std::vector<std::size_t> first, second;
  const auto split = static_cast<std::size_t>(n - ell);  // positions [0, split) go to group 1
  if (has3) {
    const std::size_t i = detail::argmin_cost(x, inst.oracle(g.group3.front()), 0, x.size());
    res.chosen = i;
    out[static_cast<std::size_t>(g.group3.front())] = x[i];
    const std::size_t cut = i < split ? split : split - 1;
    for (std::size_t p = 0; p < x.size(); ++p) {
      if (p == i) continue;
      (p < cut ? first : second).push_back(p);
    }
  } else {
    for (std::size_t p = 0; p < x.size(); ++p) (p < split ? first : second).push_back(p);
  }
  if (first.size() != g.group1.size() || second.size() != g.group2.size()) {
    throw GuaranteeViolation("bundle split does not match the group sizes");
  }
  for (std::size_t t = 0; t < first.size(); ++t) out[static_cast<std::size_t>(g.group1[t])] = x[first[t]];
  for (std::size_t t = 0; t < second.size(); ++t) out[static_cast<std::size_t>(g.group2[t])] = x[second[t]];
  res.allocation = Allocation(m, std::move(out));

  const auto rep = check_tefx(res.allocation, inst);
  if (!rep.verdict) throw GuaranteeViolation("three-group output is not tEFX: " + res.allocation.str());
  return res;
}

inline Allocation tefx_three_group(const Instance& inst, const GroupSpec& g) {
  return tefx_three_group_detailed(inst, g).allocation;
}

}  // namespace chorefair
