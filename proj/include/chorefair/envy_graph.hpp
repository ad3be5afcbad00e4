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

// Top-trading envy graph, cycle elimination, and extension of a partial
// allocation by repeatedly feeding a sink.

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chorefair/fairness.hpp"

namespace chorefair {

// Edge i -> target[i] when agent i strictly prefers some bundle to its own;
// the target is the lowest-index bundle of minimum cost to i.
struct TopTradingGraph {
  std::vector<std::optional<Agent>> target;

  int n() const { return static_cast<int>(target.size()); }
  bool has_edge(Agent i, Agent j) const { return target.at(static_cast<std::size_t>(i)) == j; }
  bool is_sink(Agent i) const { return !target.at(static_cast<std::size_t>(i)).has_value(); }

  std::vector<std::pair<Agent, Agent>> edges() const {
    std::vector<std::pair<Agent, Agent>> out;
    for (Agent i = 0; i < n(); ++i) {
      if (auto t = target[static_cast<std::size_t>(i)]) out.emplace_back(i, *t);
    }
    return out;
  }

  std::optional<Agent> first_sink() const {
    for (Agent i = 0; i < n(); ++i) {
      if (is_sink(i)) return i;
    }
    return std::nullopt;
  }

  // Agents of the first cycle reached by walking from agent 0, 1, ...;
  // listed in edge order. Empty when the graph is acyclic.
  std::vector<Agent> find_cycle() const {
    std::vector<int> state(target.size(), 0);  // 0 new, 1 on current walk, 2 done
    for (Agent start = 0; start < n(); ++start) {
      if (state[static_cast<std::size_t>(start)] != 0) continue;
      std::vector<Agent> walk;
      std::optional<Agent> cur = start;
      while (cur && state[static_cast<std::size_t>(*cur)] == 0) {
        state[static_cast<std::size_t>(*cur)] = 1;
        walk.push_back(*cur);
        cur = target[static_cast<std::size_t>(*cur)];
      }
      if (cur && state[static_cast<std::size_t>(*cur)] == 1) {
        auto it = std::find(walk.begin(), walk.end(), *cur);
        return {it, walk.end()};
      }
      for (Agent a : walk) state[static_cast<std::size_t>(a)] = 2;
    }
    return {};
  }

  // "{1->2, 2->3}" with 1-based agents.
  std::string str() const {
    std::string s = "{";
    bool first = true;
    for (auto [i, j] : edges()) {
      if (!first) s += ", ";
      s += std::to_string(i + 1) + "->" + std::to_string(j + 1);
      first = false;
    }
    return s + "}";
  }

  friend bool operator==(const TopTradingGraph&, const TopTradingGraph&) = default;
};

inline TopTradingGraph build_top_trading_graph(const Allocation& alloc, const Instance& inst) {
  check_dimensions(alloc, inst);
  const int n = inst.n();
  TopTradingGraph g;
  g.target.resize(static_cast<std::size_t>(n));
  for (Agent i = 0; i < n; ++i) {
    const CostOracle& oi = inst.oracle(i);
    Agent best = 0;
    Rational best_cost = oi.cost(alloc.bundle(0));
    for (Agent k = 1; k < n; ++k) {
      Rational v = oi.cost(alloc.bundle(k));
      if (v < best_cost) {
        best = k;
        best_cost = std::move(v);
      }
    }
    if (best_cost < oi.cost(alloc.bundle(i))) g.target[static_cast<std::size_t>(i)] = best;
  }
  return g;
}

// Called with the allocation before and after each single cycle removal.
using CycleObserver = std::function<void(const Allocation& before, const Allocation& after)>;

// Rotates bundles along top-trading cycles until none remains. Each agent on
// a cycle takes the bundle of the agent it points to. Returns the number of
// cycles removed.
inline int eliminate_top_trading_cycles_in_place(Allocation& alloc, const Instance& inst,
                                                 const CycleObserver& observer = {}) {
  int removed = 0;
  for (;;) {
    const TopTradingGraph g = build_top_trading_graph(alloc, inst);
    const std::vector<Agent> cycle = g.find_cycle();
    if (cycle.empty()) return removed;
    if (removed >= inst.n()) throw GuaranteeViolation("cycle elimination did not terminate within n removals");
    Allocation before = alloc;
    for (Agent a : cycle) alloc.set_bundle(a, before.bundle(*g.target[static_cast<std::size_t>(a)]));
    ++removed;
    if (observer) observer(before, alloc);
  }
}

inline Allocation eliminate_top_trading_cycles(Allocation alloc, const Instance& inst,
                                               const CycleObserver& observer = {}) {
  eliminate_top_trading_cycles_in_place(alloc, inst, observer);
  return alloc;
}

struct ExtensionStep {
  int cycles_removed = 0;
  TopTradingGraph graph;  // after cycle removal, before the chore is placed
  Agent sink = 0;
  Chore chore = 0;
};

struct ExtensionTrace {
  std::vector<ExtensionStep> steps;
  TopTradingGraph final_graph;
};

struct ExtensionOptions {
  Rational alpha{1};
  Rational beta{1};
  bool check_preconditions = true;
  std::optional<std::vector<Chore>> pool_order;  // default: ascending index
  CycleObserver observer;
};

struct ExtensionResult {
  Allocation allocation;
  ExtensionTrace trace;
};

// R_i: agents j with C_i(b) <= beta * C_i(X_j) for every pool chore b.
inline std::vector<std::vector<Agent>> eligible_sets(const Allocation& alloc, const Instance& inst,
                                                     const Rational& beta) {
  const int n = inst.n();
  std::vector<std::vector<Agent>> out(static_cast<std::size_t>(n));
  const std::vector<Chore> pool = alloc.pool().to_vector();
  for (Agent i = 0; i < n; ++i) {
    const CostOracle& oi = inst.oracle(i);
    Rational worst(0);
    for (Chore b : pool) worst = max(worst, oi.cost(b));
    for (Agent j = 0; j < n; ++j) {
      if (worst <= beta * oi.cost(alloc.bundle(j))) out[static_cast<std::size_t>(i)].push_back(j);
    }
  }
  return out;
}

namespace detail {

inline void check_extension_preconditions(const Allocation& alloc, const Instance& inst, const Rational& alpha,
                                          const Rational& beta) {
  const auto rep = check_alpha_efx(alloc, inst, alpha);
  if (!rep.verdict) {
    const Witness& w = rep.witnesses.front();
    throw PreconditionError("partial allocation is not " + alpha.str() + "-EFX: agent " + std::to_string(w.i + 1) +
                            " strongly envies agent " + std::to_string(w.j + 1) + " after removing chore " +
                            std::to_string(w.c + 1));
  }
  const int n = inst.n();
  const auto eligible = eligible_sets(alloc, inst, beta);
  for (Agent i = 0; i < n; ++i) {
    const auto& r = eligible[static_cast<std::size_t>(i)];
    if (static_cast<int>(r.size()) >= n - 1) continue;
    // Name a pool chore that excludes some agent outside R_i.
    const CostOracle& oi = inst.oracle(i);
    Chore bad = alloc.pool().to_vector().front();
    Rational bad_cost = oi.cost(bad);
    alloc.pool().for_each([&](Chore b) {
      Rational v = oi.cost(b);
      if (bad_cost < v) {
        bad = b;
        bad_cost = std::move(v);
      }
    });
    std::string members;
    for (Agent j : r) members += (members.empty() ? "" : ",") + std::to_string(j + 1);
    throw PreconditionError("extension precondition fails for agent " + std::to_string(i + 1) + " and chore " +
                            std::to_string(bad + 1) + ": eligible agents {" + members + "} number " +
                            std::to_string(r.size()) + " < " + std::to_string(n - 1));
  }
}

}  // namespace detail

// Allocates every pool chore to a sink of the top-trading graph, removing all
// cycles before each placement. The result is verified max(alpha, beta+1)-EFX.
inline ExtensionResult extend_partial(const Allocation& partial, const Instance& inst, const ExtensionOptions& opt) {
  check_dimensions(partial, inst);
  if (opt.alpha < Rational(1)) throw InvalidInput("alpha must be at least 1");
  if (opt.beta.sign() <= 0) throw InvalidInput("beta must be positive");

  std::vector<Chore> order;
  if (opt.pool_order) {
    order = *opt.pool_order;
    if (ChoreSet(order) != partial.pool() || static_cast<int>(order.size()) != partial.pool().size()) {
      throw InvalidInput("pool order is not a permutation of the pool");
    }
  } else {
    order = partial.pool().to_vector();
  }
  if (opt.check_preconditions) detail::check_extension_preconditions(partial, inst, opt.alpha, opt.beta);

  ExtensionResult res{partial, {}};
  Allocation& x = res.allocation;
  for (Chore c : order) {
    ExtensionStep step;
    step.cycles_removed = eliminate_top_trading_cycles_in_place(x, inst, opt.observer);
    step.graph = build_top_trading_graph(x, inst);
    const auto sink = step.graph.first_sink();
    if (!sink) throw GuaranteeViolation("acyclic top-trading graph without a sink");
    step.sink = *sink;
    step.chore = c;
    x.give(*sink, c);
    res.trace.steps.push_back(std::move(step));
  }
  res.trace.final_graph = build_top_trading_graph(x, inst);

  if (opt.check_preconditions) {
    const Rational bound = max(opt.alpha, opt.beta + Rational(1));
    const auto rep = check_alpha_efx(x, inst, bound);
    if (!rep.verdict) {
      throw GuaranteeViolation("extension output is not " + bound.str() + "-EFX: " + x.str());
    }
  }
  return res;
}

inline Allocation extend_partial(const Allocation& partial, const Instance& inst, const Rational& alpha,
                                 const Rational& beta, bool check_preconditions) {
  ExtensionOptions opt;
  opt.alpha = alpha;
  opt.beta = beta;
  opt.check_preconditions = check_preconditions;
  return extend_partial(partial, inst, opt).allocation;
}

}  // namespace chorefair
