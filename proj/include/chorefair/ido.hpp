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

// 2-EFX for n agents whose costs agree on the order of the n-1 most costly
// chores.

#include <string>
#include <utility>

#include "chorefair/envy_graph.hpp"
#include "chorefair/properties.hpp"

namespace chorefair {

struct IdoResult {
  Allocation seed;
  Allocation allocation;
  ExtensionTrace extension;
};

// Shared top chore t goes to agent t for t < n-1; the last agent starts empty.
inline Allocation partial_ido_seed(const Instance& inst) {
  const int n = inst.n();
  const int t = first_ido_disagreement(inst, n - 1);
  if (t >= 0) {
    throw PreconditionError("not " + std::to_string(n - 1) + "-partial-IDO at position " + std::to_string(t + 1));
  }
  const auto order = top_chore_order(inst.oracle(0));
  Allocation seed = Allocation::empty(inst.m(), n);
  for (int k = 0; k < std::min(n - 1, inst.m()); ++k) seed.give(k, order[static_cast<std::size_t>(k)]);
  return seed;
}

inline IdoResult partial_ido_2efx_detailed(const Instance& inst, const CycleObserver& observer = {}) {
  IdoResult res;
  res.seed = partial_ido_seed(inst);
  if (!check_efx(res.seed, inst).verdict) throw GuaranteeViolation("seed allocation is not EFX");
  ExtensionOptions opt;
  opt.alpha = Rational(1);
  opt.beta = Rational(1);
  opt.check_preconditions = true;
  opt.observer = observer;
  auto ext = extend_partial(res.seed, inst, opt);
  res.allocation = std::move(ext.allocation);
  res.extension = std::move(ext.trace);
  if (!check_alpha_efx(res.allocation, inst, Rational(2)).verdict) {
    throw GuaranteeViolation("partial-IDO output is not 2-EFX: " + res.allocation.str());
  }
  return res;
}

inline Allocation partial_ido_2efx(const Instance& inst) { return partial_ido_2efx_detailed(inst).allocation; }

}  // namespace chorefair
