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

// Brute-force search over every full allocation.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chorefair/fairness.hpp"

namespace chorefair {

inline constexpr std::uint64_t kDefaultSearchLimit = 10'000'000;

inline std::uint64_t search_limit() { return max_enum_override().value_or(kDefaultSearchLimit); }

namespace detail {

// Per-agent subset costs, either precomputed or evaluated on demand.
class CostCache {
 public:
  explicit CostCache(const Instance& inst) : inst_(inst) {
    if (inst.m() <= 16) {
      const std::size_t total = std::size_t{1} << inst.m();
      table_.resize(static_cast<std::size_t>(inst.n()));
      for (Agent i = 0; i < inst.n(); ++i) {
        auto& t = table_[static_cast<std::size_t>(i)];
        t.reserve(total);
        for (std::size_t mask = 0; mask < total; ++mask) t.push_back(inst.cost(i, ChoreSet(mask)));
      }
    }
  }

  Rational cost(Agent i, std::uint64_t mask) const {
    if (!table_.empty()) return table_[static_cast<std::size_t>(i)][mask];
    return inst_.cost(i, ChoreSet(mask));
  }

 private:
  const Instance& inst_;
  std::vector<std::vector<Rational>> table_;
};

inline bool satisfies(const std::vector<std::uint64_t>& bundles, const CostCache& cache, const Criterion& crit) {
  const int n = static_cast<int>(bundles.size());
  const bool tefx = crit.kind == Criterion::Kind::kTefx;
  for (Agent i = 0; i < n; ++i) {
    const std::uint64_t xi = bundles[static_cast<std::size_t>(i)];
    if (xi == 0) continue;
    if (tefx) {
      for (std::uint64_t b = xi; b != 0; b &= b - 1) {
        const std::uint64_t bit = b & (~b + 1);
        const Rational lhs = cache.cost(i, xi & ~bit);
        for (Agent j = 0; j < n; ++j) {
          if (j != i && cache.cost(i, bundles[static_cast<std::size_t>(j)] | bit) < lhs) return false;
        }
      }
      continue;
    }
    Rational worst(0);
    for (std::uint64_t b = xi; b != 0; b &= b - 1) worst = max(worst, cache.cost(i, xi & ~(b & (~b + 1))));
    for (Agent j = 0; j < n; ++j) {
      if (j != i && crit.alpha * cache.cost(i, bundles[static_cast<std::size_t>(j)]) < worst) return false;
    }
  }
  return true;
}

}  // namespace detail

// First full allocation, in lexicographic order of the assignment vector
// (chore 1 most significant), satisfying the criterion. nullopt certifies
// that none exists. Refuses when n^m exceeds the search limit.
inline std::optional<Allocation> exhaustive_search(const Instance& inst, const Criterion& crit) {
  const int n = inst.n();
  const int m = inst.m();
  const std::uint64_t space = saturating_pow(static_cast<std::uint64_t>(n), static_cast<unsigned>(m));
  if (space > search_limit()) {
    throw EnumerationLimit("exhaustive search over " + std::to_string(n) + "^" + std::to_string(m) +
                           " allocations exceeds the limit of " + std::to_string(search_limit()));
  }
  const detail::CostCache cache(inst);
  std::vector<int> assign(static_cast<std::size_t>(m), 0);
  std::vector<std::uint64_t> bundles(static_cast<std::size_t>(n), 0);
  bundles[0] = ChoreSet::full(m).bits();
  for (;;) {
    if (detail::satisfies(bundles, cache, crit)) {
      std::vector<ChoreSet> out;
      for (auto b : bundles) out.emplace_back(b);
      return Allocation(m, std::move(out));
    }
    // Odometer step; the last chore varies fastest.
    int pos = m - 1;
    while (pos >= 0) {
      auto& a = assign[static_cast<std::size_t>(pos)];
      const std::uint64_t bit = std::uint64_t{1} << pos;
      bundles[static_cast<std::size_t>(a)] &= ~bit;
      a = (a + 1) % n;
      bundles[static_cast<std::size_t>(a)] |= bit;
      if (a != 0) break;
      --pos;
    }
    if (pos < 0) return std::nullopt;
  }
}

}  // namespace chorefair
