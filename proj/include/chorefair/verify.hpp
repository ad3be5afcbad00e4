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

// Replay of a competing three-agent procedure on the six-chore instance where
// it loses every constant approximation factor.

#include <algorithm>
#include <vector>

#include "chorefair/envy_graph.hpp"
#include "chorefair/exhaustive.hpp"
#include "chorefair/generate.hpp"

namespace chorefair {

struct RivalRun {
  Instance instance;
  Allocation seed;
  Allocation allocation;
  // Top-trading graphs of the seed, after each placement, and at the end.
  std::vector<TopTradingGraph> graphs;
  ExtensionTrace extension;
  // max_c C3(X3 \ c) / C3(X1).
  Rational ratio;
};

namespace detail {

inline Chore argmax_unallocated(const CostOracle& oracle, ChoreSet pool) {
  Chore best = pool.to_vector().front();
  pool.for_each([&](Chore c) {
    if (oracle.cost(best) < oracle.cost(c)) best = c;
  });
  return best;
}

}  // namespace detail

inline RivalRun rival_counterexample_run(const Rational& m1, const Rational& m2) {
  Instance inst = counterexample_instance(m1, m2);
  Allocation seed = Allocation::empty(inst.m(), inst.n());
  seed.give(2, 0);
  seed.give(0, detail::argmax_unallocated(inst.oracle(1), seed.pool()));
  seed.give(1, detail::argmax_unallocated(inst.oracle(0), seed.pool()));

  // Pool consumed in decreasing agent-3 cost, lower index first on ties.
  std::vector<Chore> order = seed.pool().to_vector();
  const CostOracle& c3 = inst.oracle(2);
  std::stable_sort(order.begin(), order.end(), [&](Chore a, Chore b) { return c3.cost(b) < c3.cost(a); });

  ExtensionOptions opt;
  opt.check_preconditions = false;
  opt.pool_order = order;
  auto ext = extend_partial(seed, inst, opt);

  RivalRun run{inst, seed, ext.allocation, {}, ext.trace, Rational(0)};
  for (const auto& step : ext.trace.steps) run.graphs.push_back(step.graph);
  run.graphs.push_back(ext.trace.final_graph);
  const Allocation& x = run.allocation;
  run.ratio = max_removal_cost(c3, x.bundle(2)) / c3.cost(x.bundle(0));
  return run;
}

}  // namespace chorefair
