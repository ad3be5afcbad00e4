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

// Second fairness checker for tests. It shares no code with the library's
// checker: costs are recomputed from the raw oracle data on explicit chore
// lists, and allocations are assignment vectors.

#include <gmpxx.h>

#include <variant>
#include <vector>

#include "chorefair/instance.hpp"

namespace chorefair::testing {

using Assignment = std::vector<int>;  // chore -> agent, -1 for the pool
using ChoreList = std::vector<int>;

inline mpq_class ref_cost(const CostOracle& o, const ChoreList& s) {
  auto sum = [&](const std::vector<Rational>& w) {
    mpq_class t = 0;
    for (int c : s) t += w[static_cast<std::size_t>(c)].raw();
    return t;
  };
  if (const auto* a = std::get_if<Additive>(&o.variant())) return sum(a->costs);
  if (const auto* a = std::get_if<CappedAdditive>(&o.variant())) {
    mpq_class t = sum(a->costs);
    return t < a->cap.raw() ? t : mpq_class(a->cap.raw());
  }
  if (const auto* a = std::get_if<MaxOfAdditive>(&o.variant())) {
    mpq_class best = 0;
    for (const auto& row : a->rows) {
      mpq_class t = sum(row);
      if (t > best) best = t;
    }
    return best;
  }
  const auto& t = std::get<TabulatedMonotone>(o.variant());
  std::size_t mask = 0;
  for (int c : s) mask += std::size_t{1} << c;
  return t.values[mask].raw();
}

inline std::vector<ChoreList> ref_bundles(const Assignment& a, int n) {
  std::vector<ChoreList> out(static_cast<std::size_t>(n));
  for (std::size_t c = 0; c < a.size(); ++c) {
    if (a[c] >= 0) out[static_cast<std::size_t>(a[c])].push_back(static_cast<int>(c));
  }
  return out;
}

inline ChoreList ref_remove(const ChoreList& s, std::size_t at) {
  ChoreList out;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k != at) out.push_back(s[k]);
  }
  return out;
}

// alpha-EFX among the allocated bundles; unallocated chores are ignored.
inline bool ref_alpha_efx(const Instance& inst, const Assignment& a, const mpq_class& alpha) {
  const auto x = ref_bundles(a, inst.n());
  for (int i = 0; i < inst.n(); ++i) {
    const auto& xi = x[static_cast<std::size_t>(i)];
    for (std::size_t k = 0; k < xi.size(); ++k) {
      const mpq_class lhs = ref_cost(inst.oracle(i), ref_remove(xi, k));
      for (int j = 0; j < inst.n(); ++j) {
        if (j != i && lhs > alpha * ref_cost(inst.oracle(i), x[static_cast<std::size_t>(j)])) return false;
      }
    }
  }
  return true;
}

inline bool ref_tefx(const Instance& inst, const Assignment& a) {
  const auto x = ref_bundles(a, inst.n());
  for (int i = 0; i < inst.n(); ++i) {
    const auto& xi = x[static_cast<std::size_t>(i)];
    for (std::size_t k = 0; k < xi.size(); ++k) {
      const mpq_class lhs = ref_cost(inst.oracle(i), ref_remove(xi, k));
      for (int j = 0; j < inst.n(); ++j) {
        if (j == i) continue;
        ChoreList xj = x[static_cast<std::size_t>(j)];
        xj.push_back(xi[k]);
        if (lhs > ref_cost(inst.oracle(i), xj)) return false;
      }
    }
  }
  return true;
}

inline Assignment to_assignment(const Allocation& alloc, int m) {
  Assignment a(static_cast<std::size_t>(m), -1);
  for (int i = 0; i < alloc.n(); ++i) {
    alloc.bundle(i).for_each([&](Chore c) { a[static_cast<std::size_t>(c)] = i; });
  }
  return a;
}

inline Allocation from_assignment(const Assignment& a, int n) {
  std::vector<ChoreSet> bundles(static_cast<std::size_t>(n));
  for (std::size_t c = 0; c < a.size(); ++c) {
    if (a[c] >= 0) bundles[static_cast<std::size_t>(a[c])].insert(static_cast<Chore>(c));
  }
  return Allocation(static_cast<int>(a.size()), std::move(bundles));
}

// Calls f on every full assignment of m chores to n agents.
template <typename F>
void for_each_assignment(int n, int m, F&& f) {
  Assignment a(static_cast<std::size_t>(m), 0);
  for (;;) {
    f(a);
    int pos = 0;
    while (pos < m && ++a[static_cast<std::size_t>(pos)] == n) a[static_cast<std::size_t>(pos++)] = 0;
    if (pos == m) return;
  }
}

}  // namespace chorefair::testing
