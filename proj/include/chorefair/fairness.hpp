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

#include <string>
#include <vector>

#include "chorefair/instance.hpp"

namespace chorefair {

struct Criterion {
  enum class Kind { kAlphaEfx, kTefx };
  Kind kind = Kind::kAlphaEfx;
  Rational alpha{1};

  static Criterion efx() { return {Kind::kAlphaEfx, Rational(1)}; }
  static Criterion alpha_efx(Rational a) {
    if (a < Rational(1)) throw InvalidInput("alpha must be at least 1");
    return {Kind::kAlphaEfx, std::move(a)};
  }
  static Criterion tefx() { return {Kind::kTefx, Rational(1)}; }

  std::string name() const { return kind == Kind::kTefx ? "tefx" : "alpha_efx"; }
  friend bool operator==(const Criterion&, const Criterion&) = default;
};

// One strong-envy instance: agent i, holding chore c, against agent j.
struct Witness {
  Agent i;
  Agent j;
  Chore c;
  Rational lhs;
  Rational rhs;
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct FairnessReport {
  Criterion criterion;
  bool verdict = true;
  std::vector<Witness> witnesses;
};

// max over c in s of C(s \ c); zero for the empty set.
inline Rational max_removal_cost(const CostOracle& oracle, ChoreSet s) {
  Rational best(0);
  s.for_each([&](Chore c) {
    Rational v = oracle.cost(s.without(c));
    if (best < v) best = std::move(v);
  });
  return best;
}

// Every (i, j, c) with C_i(X_i \ c) > alpha * C_i(X_j). The pool is ignored.
inline FairnessReport check_alpha_efx(const Allocation& alloc, const Instance& inst, const Rational& alpha) {
  check_dimensions(alloc, inst);
  FairnessReport rep{Criterion::alpha_efx(alpha), true, {}};
  const int n = inst.n();
  for (Agent i = 0; i < n; ++i) {
    const CostOracle& oi = inst.oracle(i);
    const ChoreSet xi = alloc.bundle(i);
    if (xi.empty()) continue;
    std::vector<Rational> scaled(static_cast<std::size_t>(n));
    for (Agent j = 0; j < n; ++j) {
      if (j != i) scaled[static_cast<std::size_t>(j)] = alpha * oi.cost(alloc.bundle(j));
    }
    xi.for_each([&](Chore c) {
      const Rational lhs = oi.cost(xi.without(c));
      for (Agent j = 0; j < n; ++j) {
        if (j == i) continue;
        const Rational& rhs = scaled[static_cast<std::size_t>(j)];
        if (rhs < lhs) rep.witnesses.push_back({i, j, c, lhs, rhs});
      }
    });
  }
  rep.verdict = rep.witnesses.empty();
  return rep;
}

inline FairnessReport check_efx(const Allocation& alloc, const Instance& inst) {
  return check_alpha_efx(alloc, inst, Rational(1));
}

// Every (i, j, c) with C_i(X_i \ c) > C_i(X_j + c).
inline FairnessReport check_tefx(const Allocation& alloc, const Instance& inst) {
  check_dimensions(alloc, inst);
  FairnessReport rep{Criterion::tefx(), true, {}};
  const int n = inst.n();
  for (Agent i = 0; i < n; ++i) {
    const CostOracle& oi = inst.oracle(i);
    const ChoreSet xi = alloc.bundle(i);
    xi.for_each([&](Chore c) {
      const Rational lhs = oi.cost(xi.without(c));
      for (Agent j = 0; j < n; ++j) {
        if (j == i) continue;
        Rational rhs = oi.cost(alloc.bundle(j).with(c));
        if (rhs < lhs) rep.witnesses.push_back({i, j, c, lhs, std::move(rhs)});
      }
    });
  }
  rep.verdict = rep.witnesses.empty();
  return rep;
}

inline FairnessReport check(const Allocation& alloc, const Instance& inst, const Criterion& criterion) {
  return criterion.kind == Criterion::Kind::kTefx ? check_tefx(alloc, inst)
                                                   : check_alpha_efx(alloc, inst, criterion.alpha);
}

// Per agent i: every pool chore b has C_i(b) <= C_i(X_j) for at least n-1 agents j.
inline std::vector<bool> check_partial_property2(const Allocation& alloc, const Instance& inst) {
  check_dimensions(alloc, inst);
  const int n = inst.n();
  std::vector<bool> out(static_cast<std::size_t>(n), true);
  for (Agent i = 0; i < n; ++i) {
    const CostOracle& oi = inst.oracle(i);
    std::vector<Rational> bundle_cost;
    for (Agent j = 0; j < n; ++j) bundle_cost.push_back(oi.cost(alloc.bundle(j)));
    alloc.pool().for_each([&](Chore b) {
      const Rational cb = oi.cost(b);
      int covering = 0;
      for (const auto& v : bundle_cost) covering += (cb <= v) ? 1 : 0;
      if (covering < n - 1) out[static_cast<std::size_t>(i)] = false;
    });
  }
  return out;
}

// Bundle position `pos` is alpha-EFX-feasible under a single oracle shared by
// every position: C(B_pos \ c) <= alpha * C(B_j) for all j != pos, c in B_pos.
inline bool efx_feasible(const std::vector<ChoreSet>& bundles, std::size_t pos, const CostOracle& oracle,
                         const Rational& alpha = Rational(1)) {
  const Rational worst = max_removal_cost(oracle, bundles[pos]);
  if (worst.is_zero()) return true;
  for (std::size_t j = 0; j < bundles.size(); ++j) {
    if (j != pos && alpha * oracle.cost(bundles[j]) < worst) return false;
  }
  return true;
}

// Bundle position `pos` is tEFX-feasible under a single oracle shared by
// every position: C(B_pos \ c) <= C(B_j + c) for all j != pos, c in B_pos.
inline bool tefx_feasible(const std::vector<ChoreSet>& bundles, std::size_t pos, const CostOracle& oracle) {
  bool ok = true;
  bundles[pos].for_each([&](Chore c) {
    if (!ok) return;
    const Rational lhs = oracle.cost(bundles[pos].without(c));
    for (std::size_t j = 0; j < bundles.size() && ok; ++j) {
      if (j != pos && oracle.cost(bundles[j].with(c)) < lhs) ok = false;
    }
  });
  return ok;
}

}  // namespace chorefair
