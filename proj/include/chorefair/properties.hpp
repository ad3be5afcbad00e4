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

// Structural checks on cost oracles and the non-degeneracy perturbation.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chorefair/instance.hpp"

namespace chorefair {

enum class OracleProperty { kMonotone, kSubadditive, kNondegenerate };

inline std::string to_string(OracleProperty p) {
  switch (p) {
    case OracleProperty::kMonotone: return "monotone";
    case OracleProperty::kSubadditive: return "subadditive";
    case OracleProperty::kNondegenerate: return "nondegenerate";
  }
  return "?";
}

struct EnumerationLimits {
  int max_m_subsets = 14;     // monotone, nondegenerate: 2^m subsets
  int max_m_subadditive = 10;  // 3^m disjoint pairs
  std::size_t max_witnesses = 1000;
};

// Violating pairs: (S, S+c) for monotone, disjoint (S, T) with
// C(S+T) > C(S)+C(T) for subadditive, equal-cost (S, T) for nondegenerate.
struct PropertyResult {
  OracleProperty property;
  bool holds = true;
  std::uint64_t violation_count = 0;
  std::vector<std::pair<ChoreSet, ChoreSet>> witnesses;
  bool truncated = false;
};

namespace detail {

inline void require_enumerable(int m, std::uint64_t base, int default_max_m, const char* what) {
  const std::uint64_t size = saturating_pow(base, static_cast<unsigned>(m));
  if (auto cap = max_enum_override()) {
    if (size > *cap) {
      throw EnumerationLimit(std::string(what) + ": enumeration of " + std::to_string(size) +
                             " exceeds CHOREFAIR_MAX_ENUM");
    }
    return;
  }
  if (m > default_max_m) {
    throw EnumerationLimit(std::string(what) + ": m = " + std::to_string(m) + " exceeds the limit of " +
                           std::to_string(default_max_m));
  }
}

// Cost of every subset, indexed by bitmask.
inline std::vector<Rational> all_subset_costs(const CostOracle& oracle) {
  const int m = oracle.chore_count();
  if (m > kMaxTableChores) throw EnumerationLimit("subset table limited to 20 chores");
  const std::size_t total = std::size_t{1} << m;
  std::vector<Rational> out(total);
  if (const auto* a = std::get_if<Additive>(&oracle.variant())) {
    for (std::size_t mask = 1; mask < total; ++mask) {
      const int low = std::countr_zero(mask);
      out[mask] = out[mask & (mask - 1)] + a->costs[static_cast<std::size_t>(low)];
    }
    return out;
  }
  if (const auto* t = std::get_if<TabulatedMonotone>(&oracle.variant())) return t->values;
  for (std::size_t mask = 1; mask < total; ++mask) out[mask] = oracle.cost(ChoreSet(mask));
  return out;
}

}  // namespace detail

inline PropertyResult check_monotone(const CostOracle& oracle, const EnumerationLimits& lim = {}) {
  const int m = oracle.chore_count();
  detail::require_enumerable(m, 2, lim.max_m_subsets, "monotone check");
  const auto costs = detail::all_subset_costs(oracle);
  PropertyResult r{OracleProperty::kMonotone};
  for (std::size_t mask = 0; mask < costs.size(); ++mask) {
    for (int c = 0; c < m; ++c) {
      const std::size_t bit = std::size_t{1} << c;
      if (mask & bit) continue;
      if (costs[mask | bit] < costs[mask]) {
        ++r.violation_count;
        if (r.witnesses.size() < lim.max_witnesses) {
          r.witnesses.emplace_back(ChoreSet(mask), ChoreSet(mask | bit));
        } else {
          r.truncated = true;
        }
      }
    }
  }
  r.holds = r.violation_count == 0;
  return r;
}

inline PropertyResult check_subadditive(const CostOracle& oracle, const EnumerationLimits& lim = {}) {
  const int m = oracle.chore_count();
  detail::require_enumerable(m, 3, lim.max_m_subadditive, "subadditive check");
  const auto costs = detail::all_subset_costs(oracle);
  const std::size_t full = costs.size() - 1;
  PropertyResult r{OracleProperty::kSubadditive};
  for (std::size_t s = 1; s <= full; ++s) {
    const std::size_t rest = full & ~s;
    // Nonempty submasks t of the complement with t > s, so each unordered pair once.
    for (std::size_t t = rest; t != 0; t = (t - 1) & rest) {
      if (t < s) continue;
      if (costs[s] + costs[t] < costs[s | t]) {
        ++r.violation_count;
        if (r.witnesses.size() < lim.max_witnesses) {
          r.witnesses.emplace_back(ChoreSet(s), ChoreSet(t));
        } else {
          r.truncated = true;
        }
      }
    }
  }
  r.holds = r.violation_count == 0;
  return r;
}

inline PropertyResult check_nondegenerate(const CostOracle& oracle, const EnumerationLimits& lim = {}) {
  const int m = oracle.chore_count();
  detail::require_enumerable(m, 2, lim.max_m_subsets, "nondegenerate check");
  const auto costs = detail::all_subset_costs(oracle);
  std::vector<std::uint64_t> order(costs.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return costs[a] < costs[b]; });
  PropertyResult r{OracleProperty::kNondegenerate};
  for (std::size_t lo = 0; lo < order.size();) {
    std::size_t hi = lo + 1;
    while (hi < order.size() && costs[order[hi]] == costs[order[lo]]) ++hi;
    for (std::size_t a = lo; a < hi; ++a) {
      for (std::size_t b = a + 1; b < hi; ++b) {
        ++r.violation_count;
        if (r.witnesses.size() < lim.max_witnesses) {
          r.witnesses.emplace_back(ChoreSet(order[a]), ChoreSet(order[b]));
        } else {
          r.truncated = true;
        }
      }
    }
    lo = hi;
  }
  r.holds = r.violation_count == 0;
  return r;
}

inline std::vector<PropertyResult> validate_oracle(const CostOracle& oracle, std::span<const OracleProperty> checks,
                                                   const EnumerationLimits& lim = {}) {
  std::vector<PropertyResult> out;
  for (OracleProperty p : checks) {
    switch (p) {
      case OracleProperty::kMonotone: out.push_back(check_monotone(oracle, lim)); break;
      case OracleProperty::kSubadditive: out.push_back(check_subadditive(oracle, lim)); break;
      case OracleProperty::kNondegenerate: out.push_back(check_nondegenerate(oracle, lim)); break;
    }
  }
  return out;
}

// First position t < min(k, m) where two agents' top-chore orders differ, or -1.
inline int first_ido_disagreement(const Instance& inst, int k) {
  const int limit = std::min(k, inst.m());
  std::vector<std::vector<Chore>> orders;
  for (const auto& o : inst.oracles()) orders.push_back(top_chore_order(o));
  for (int t = 0; t < limit; ++t) {
    const auto pos = static_cast<std::size_t>(t);
    for (const auto& order : orders) {
      if (order[pos] != orders.front()[pos]) return t;
    }
  }
  return -1;
}

inline bool is_nondegenerate(const Instance& inst, const EnumerationLimits& lim = {}) {
  for (const auto& o : inst.oracles()) {
    if (!check_nondegenerate(o, lim).holds) return false;
  }
  return true;
}

// True iff the first min(k, m) entries of every agent's top-chore order agree.
inline bool check_k_partial_ido(const Instance& inst, int k) {
  if (k < 1) throw InvalidInput("k must be at least 1");
  return first_ido_disagreement(inst, k) < 0;
}

struct PerturbationParams {
  Rational delta;
  Rational epsilon;
};

// Smallest positive gap between two subset costs, minimized over agents.
// Additive oracles are enumerable up to 20 chores, others up to 14 (or the
// CHOREFAIR_MAX_ENUM override). Returns 1 when no agent has two subsets of
// different cost, since any positive gap then works.
inline Rational min_cost_gap(const Instance& inst) {
  std::optional<Rational> best;
  for (const auto& o : inst.oracles()) {
    detail::require_enumerable(inst.m(), 2, o.is_additive() ? kMaxTableChores : 14, "perturbation gap");
    auto costs = detail::all_subset_costs(o);
    std::sort(costs.begin(), costs.end());
    for (std::size_t k = 1; k < costs.size(); ++k) {
      if (costs[k] == costs[k - 1]) continue;
      Rational gap = costs[k] - costs[k - 1];
      if (!best || gap < *best) best = std::move(gap);
    }
  }
  return best.value_or(Rational(1));
}

// C'(S) = C(S) + eps * sum over chores j in S of 2^j, with 1-based j and
// eps = delta / 2^(m+2). Strict cost orders of C are preserved and C' has no
// ties. Additive and max-of-additive oracles keep their form; capped and
// tabulated ones become tables.
inline std::pair<Instance, PerturbationParams> perturb_nondegenerate(const Instance& inst,
                                                                    std::optional<Rational> delta = std::nullopt) {
  const int m = inst.m();
  Rational d = delta ? *delta : min_cost_gap(inst);
  if (d.sign() <= 0) throw InvalidInput("perturbation gap must be positive");
  const Rational eps = d / pow2(static_cast<unsigned>(m + 2));
  std::vector<Rational> bump(static_cast<std::size_t>(m));
  for (int c = 0; c < m; ++c) bump[static_cast<std::size_t>(c)] = eps * pow2(static_cast<unsigned>(c + 1));

  std::vector<CostOracle> out;
  for (const auto& o : inst.oracles()) {
    if (const auto* a = std::get_if<Additive>(&o.variant())) {
      auto costs = a->costs;
      for (int c = 0; c < m; ++c) costs[static_cast<std::size_t>(c)] += bump[static_cast<std::size_t>(c)];
      out.emplace_back(Additive{std::move(costs)});
    } else if (const auto* mx = std::get_if<MaxOfAdditive>(&o.variant())) {
      auto rows = mx->rows;
      for (auto& row : rows) {
        for (int c = 0; c < m; ++c) row[static_cast<std::size_t>(c)] += bump[static_cast<std::size_t>(c)];
      }
      out.emplace_back(MaxOfAdditive{std::move(rows)});
    } else {
      if (m > kMaxTableChores) throw EnumerationLimit("perturbed table oracle limited to 20 chores");
      auto values = detail::all_subset_costs(o);
      for (std::size_t mask = 1; mask < values.size(); ++mask) {
        ChoreSet(mask).for_each([&](Chore c) { values[mask] += bump[static_cast<std::size_t>(c)]; });
      }
      out.emplace_back(TabulatedMonotone{std::move(values)});
    }
  }
  return {Instance(m, std::move(out)), PerturbationParams{std::move(d), eps}};
}

}  // namespace chorefair
