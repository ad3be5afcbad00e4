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

#include <gtest/gtest.h>

#include "test_util.hpp"

namespace chorefair {
namespace {

using testing::Q;
using testing::S;

TEST(IdenticalCostEfxTest, OneChorePerBundle) {
  const auto b = identical_cost_efx(3, 3, testing::additive({5, 1, 2}));
  for (const auto& x : b) EXPECT_EQ(x.size(), 1);
}

TEST(IdenticalCostEfxTest, Examples) {
  // Any split into {5, 3} and {3, 3} works; {5} and {3, 3, 3} does not.
  const auto o1 = testing::additive({5, 3, 3, 3});
  const auto b1 = identical_cost_efx(4, 2, o1);
  EXPECT_TRUE(all_efx_feasible(b1, o1));
  EXPECT_EQ(b1[0].size(), 2);
  EXPECT_EQ(b1[1].size(), 2);
  EXPECT_FALSE(all_efx_feasible({S({1}), S({2, 3, 4})}, o1));
  const auto o2 = testing::additive({4, 3, 2, 1});
  EXPECT_EQ(identical_cost_efx(4, 2, o2), (std::vector<ChoreSet>{S({1, 4}), S({2, 3})}));
}

TEST(IdenticalCostEfxTest, GeneralMonotoneOracles) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    detail::CostSampler rng(seed);
    const int m = 4 + static_cast<int>(seed % 8);
    const int count = 2 + static_cast<int>(seed % 4);
    const CostOracle o = rng.general_monotone(m);
    const auto res = identical_cost_efx_detailed(m, count, o);
    EXPECT_TRUE(all_efx_feasible(res.bundles, o)) << seed << " " << res.method;
    ChoreSet all;
    for (const auto& b : res.bundles) all |= b;
    EXPECT_EQ(all, ChoreSet::full(m));
  }
}

TEST(TwoGroupTest, BaseCase) {
  const auto c1 = testing::additive({4, 3, 2, 1});
  const auto c2 = testing::additive({1, 2, Q(3, 2), Q(19, 10)});
  const auto res = tefx_two_group_detailed(4, 2, c1, c2, 1);
  EXPECT_EQ(res.bundles, (std::vector<ChoreSet>{S({2, 3}), S({1, 4})}));
  EXPECT_TRUE(res.trace.steps.empty());
}

TEST(TwoGroupTest, LoopMovesChoresAndKeepsInvariants) {
  // C1 isolates chore 1; C2 finds the remaining pile too heavy.
  const auto c1 = testing::additive({10, 1, 1, 1, 1, 1, 1});
  const auto c2 = testing::additive({1, 1, 1, 1, 1, 1, 1});
  const auto res = tefx_two_group_detailed(7, 2, c1, c2, 2);
  EXPECT_GE(res.trace.steps.size(), 2u);
  for (const auto& s : res.trace.steps) {
    EXPECT_TRUE(s.invariant1);
    EXPECT_TRUE(s.invariant2);
    EXPECT_EQ(s.phi_before, s.phi_after + 1);
  }
  for (std::size_t p = 0; p < 2; ++p) EXPECT_TRUE(tefx_feasible(res.bundles, p, c2));
  EXPECT_TRUE(efx_feasible(res.bundles, 0, c1));
}

TEST(TwoGroupTest, SeededPropertiesForEveryK) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    detail::CostSampler rng(seed);
    const int n = 2 + static_cast<int>(seed % 4);
    const int m = n + static_cast<int>(seed % 9);
    const int k = 1 + static_cast<int>(seed % static_cast<std::uint64_t>(n));
    const CostOracle c1 = rng.general_monotone(m);
    const CostOracle c2 = CostOracle::additive(rng.ratio_costs(m, Q(2)));
    const auto res = tefx_two_group_detailed(m, n, c1, c2, k);
    const auto pivot = static_cast<std::size_t>(n - k);
    for (std::size_t p = 0; p <= pivot; ++p) EXPECT_TRUE(efx_feasible(res.bundles, p, c1));
    for (std::size_t p = pivot; p < static_cast<std::size_t>(n); ++p) EXPECT_TRUE(tefx_feasible(res.bundles, p, c2));
  }
}

TEST(TwoGroupTest, Preconditions) {
  const auto c1 = testing::additive({1, 2, 3});
  EXPECT_THROW(tefx_two_group(3, 2, c1, testing::additive({1, 3, 1}), 1), PreconditionError);
  EXPECT_THROW(tefx_two_group(3, 2, c1, CostOracle(CappedAdditive{{1, 1, 1}, Q(2)}), 1), PreconditionError);
  EXPECT_THROW(tefx_two_group(3, 2, c1, c1, 3), InvalidInput);
}

TEST(ThreeGroupTest, SingletonGroups) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    detail::CostSampler rng(seed);
    const int m = 3 + static_cast<int>(seed % 8);
    const Instance inst(m, {CostOracle::additive(rng.costs(m)), CostOracle::additive(rng.ratio_costs(m, Q(2))),
                            rng.table(m)});
    const Allocation x = tefx_three_group(inst, contiguous_groups({1, 1, 1}));
    EXPECT_TRUE(check_tefx(x, inst).verdict) << seed;
  }
}

TEST(ThreeGroupTest, GroupShapes) {
  const std::vector<std::vector<int>> shapes = {{2, 2, 1}, {3, 2}, {0, 3, 1}, {0, 2}, {3, 0, 1}, {2}, {1, 3, 1}};
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    for (const auto& sizes : shapes) {
      const Instance inst = generate_instance(Family::tefx_groups(sizes, 10), seed);
      const auto res = tefx_three_group_detailed(inst, contiguous_groups(sizes));
      EXPECT_TRUE(check_tefx(res.allocation, inst).verdict);
      EXPECT_TRUE(res.allocation.is_full());
    }
  }
}

TEST(ThreeGroupTest, RejectsMismatchedGroups) {
  const Instance inst = generate_instance(Family::tefx_groups({2, 2, 1}, 6), 1);
  EXPECT_THROW(tefx_three_group(inst, contiguous_groups({1, 3, 1})), PreconditionError);
  EXPECT_THROW(tefx_three_group(inst, contiguous_groups({2, 2})), InvalidInput);
  GroupSpec two_in_g3{{0, 1}, {}, {2, 3, 4}};
  EXPECT_THROW(tefx_three_group(inst, two_in_g3), PreconditionError);
}

}  // namespace
}  // namespace chorefair
