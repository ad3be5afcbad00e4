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

#include <array>

#include "test_util.hpp"

namespace chorefair {
namespace {

using testing::Q;
using testing::S;

TEST(OracleTest, EvaluatesEachVariant) {
  const Instance fig = testing::six_chore();
  EXPECT_EQ(fig.cost(0, S({3, 4, 5})), Q(5));
  EXPECT_EQ(fig.cost(0, {}), Q(0));

  const CostOracle capped(CappedAdditive{{3, 3, 3}, Q(5)});
  EXPECT_EQ(capped.cost(S({1, 2, 3})), Q(5));
  EXPECT_EQ(capped.cost(S({2})), Q(3));

  const CostOracle mx(MaxOfAdditive{{{1, 5}, {4, 1}}});
  EXPECT_EQ(mx.cost(S({1})), Q(4));
  EXPECT_EQ(mx.cost(S({1, 2})), Q(6));

  const CostOracle table(TabulatedMonotone{{0, 2, 3, 4}});
  EXPECT_EQ(table.chore_count(), 2);
  EXPECT_EQ(table.cost(S({1, 2})), Q(4));
}

TEST(OracleTest, RejectsBadData) {
  EXPECT_THROW(testing::additive({1, -1}), InvalidInput);
  EXPECT_THROW(CostOracle(TabulatedMonotone{{0, 1, 2}}), InvalidInput);
  EXPECT_THROW(CostOracle(TabulatedMonotone{{1, 1}}), InvalidInput);
  EXPECT_THROW(CostOracle(MaxOfAdditive{{{1, 2}, {1}}}), InvalidInput);
  EXPECT_THROW(testing::additive({1, 2}).cost(S({3})), InvalidInput);
}

TEST(ValidateOracleTest, AdditiveIsMonotoneAndSubadditive) {
  const auto o = testing::additive({7, 0, 3, 1});
  const std::array<OracleProperty, 2> checks = {OracleProperty::kMonotone, OracleProperty::kSubadditive};
  for (const auto& r : validate_oracle(o, checks)) EXPECT_TRUE(r.holds) << to_string(r.property);
}

TEST(ValidateOracleTest, SixChoreAgent3IsDegenerate) {
  const auto r = check_nondegenerate(testing::six_chore().oracle(2));
  EXPECT_FALSE(r.holds);
  const std::pair<ChoreSet, ChoreSet> w{S({4}), S({5})};
  EXPECT_NE(std::find(r.witnesses.begin(), r.witnesses.end(), w), r.witnesses.end());
}

TEST(ValidateOracleTest, CappedIsSubadditive) {
  EXPECT_TRUE(check_subadditive(CostOracle(CappedAdditive{{3, 3}, Q(4)})).holds);
}

TEST(ValidateOracleTest, DetectsViolations) {
  // C({1}) = 3 > C({1,2}) = 2 and C({1,2}) = 9 > C({1}) + C({2}) elsewhere.
  EXPECT_FALSE(check_monotone(CostOracle(TabulatedMonotone{{0, 3, 1, 2}})).holds);
  EXPECT_FALSE(check_subadditive(CostOracle(TabulatedMonotone{{0, 1, 1, 9}})).holds);
}

TEST(RatioBoundTest, Examples) {
  EXPECT_EQ(ratio_bound(testing::six_chore().oracle(0)), Q(20));
  EXPECT_EQ(ratio_bound(testing::additive({4, 4, 4})), Q(1));
  EXPECT_EQ(ratio_bound(testing::additive({2, Q(9, 5), Q(6, 5), 1})), Q(2));
  EXPECT_THROW(ratio_bound(testing::additive({2, 0})), PreconditionError);
}

TEST(TopChoreOrderTest, Examples) {
  const Instance fig = testing::six_chore();
  EXPECT_EQ(top_chore_order(fig.oracle(1)), (std::vector<Chore>{1, 0, 2, 3, 4, 5}));
  EXPECT_EQ(top_chore_order(testing::additive({1, 1, 1})), (std::vector<Chore>{0, 1, 2}));
  EXPECT_EQ(top_chore_order(fig.oracle(2)), (std::vector<Chore>{3, 4, 5, 2, 1, 0}));
}

TEST(PartialIdoTest, Examples) {
  EXPECT_TRUE(check_k_partial_ido(testing::identical_additive(3, {1, 5, 2}), 3));
  const Instance fig = testing::six_chore();
  const Instance first_two(6, {fig.oracle(0), fig.oracle(1)});
  EXPECT_FALSE(check_k_partial_ido(first_two, 2));
  EXPECT_EQ(first_ido_disagreement(first_two, 2), 0);
}

TEST(PerturbTest, SmallAdditiveExample) {
  const Instance one = testing::identical_additive(1, {1, 2, 3});
  const auto [p, params] = perturb_nondegenerate(one);
  EXPECT_EQ(params.delta, Q(1));
  EXPECT_EQ(params.epsilon, Q(1, 32));
  EXPECT_EQ(p.cost(0, S({3})), Q(13, 4));
  EXPECT_TRUE(is_nondegenerate(p));
}

TEST(PerturbTest, BreaksSixChoreTie) {
  const auto [p, params] = perturb_nondegenerate(testing::six_chore());
  EXPECT_EQ(p.cost(2, S({4})), Q(13) + Q(16) * params.epsilon);
  EXPECT_EQ(p.cost(2, S({5})), Q(13) + Q(32) * params.epsilon);
  EXPECT_LT(p.cost(2, S({4})), p.cost(2, S({5})));
}

TEST(PerturbTest, PreservesStrictOrder) {
  detail::CostSampler rng(11);
  const Instance inst(5, {rng.table(5), rng.capped(5), rng.max_of_additive(5)});
  const auto [p, params] = perturb_nondegenerate(inst);
  EXPECT_TRUE(is_nondegenerate(p));
  for (Agent i = 0; i < 3; ++i) {
    for (std::uint64_t a = 0; a < 32; ++a) {
      for (std::uint64_t b = 0; b < 32; ++b) {
        if (inst.cost(i, ChoreSet(a)) < inst.cost(i, ChoreSet(b))) {
          EXPECT_LT(p.cost(i, ChoreSet(a)), p.cost(i, ChoreSet(b)));
        }
      }
    }
  }
}

TEST(GenerateTest, FamiliesHoldTheirProperties) {
  const Instance r = generate_instance(Family::additive_ratio(Q(2), 4, 12), 7);
  for (const auto& o : r.oracles()) EXPECT_LE(ratio_bound(o), Q(2));

  const Instance g = generate_instance(Family::identical_groups({2, 2, 1}, 6), 1);
  EXPECT_EQ(g.oracle(0), g.oracle(1));
  EXPECT_EQ(g.oracle(2), g.oracle(3));

  EXPECT_TRUE(check_k_partial_ido(generate_instance(Family::k_partial_ido(3, 4, 10), 3), 3));
}

TEST(GenerateTest, Reproducible) {
  const auto f = Family::capped_additive(3, 9);
  EXPECT_EQ(generate_instance(f, 42), generate_instance(f, 42));
  EXPECT_NE(generate_instance(f, 42), generate_instance(f, 43));
}

TEST(GenerateTest, SubadditiveFamilies) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    for (const auto& f : {Family::capped_additive(3, 7), Family::max_of_additive(3, 7)}) {
      const Instance inst = generate_instance(f, seed);
      for (const auto& o : inst.oracles()) {
        EXPECT_TRUE(check_monotone(o).holds);
        EXPECT_TRUE(check_subadditive(o).holds);
      }
    }
  }
}

TEST(GenerateTest, CounterexampleConstraint) {
  EXPECT_THROW(counterexample_instance(Q(24), Q(12)), InvalidInput);
  EXPECT_THROW(counterexample_instance(Q(26), Q(5)), InvalidInput);
}

}  // namespace
}  // namespace chorefair
