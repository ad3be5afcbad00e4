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

// Seeded instance families. Every family is a pure function of its
// parameters and the seed.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "chorefair/properties.hpp"

namespace chorefair {

struct Family {
  enum class Kind {
    kAdditive,
    kAdditiveRatio,
    kCappedAdditive,
    kMaxOfAdditive,
    kPartialIdo,
    kIdenticalGroups,
    kTefxGroups,
    kCounterexample,
  };

  Kind kind = Kind::kAdditive;
  int n = 3;
  int m = 6;
  Rational alpha{2};       // additive_ratio
  int k = 1;               // k_partial_ido
  std::vector<int> sizes;  // identical_groups, tefx_groups
  Rational m1{26};         // counterexample
  Rational m2{12};

  static Family additive(int n, int m) { return {Kind::kAdditive, n, m}; }
  static Family additive_ratio(Rational alpha, int n, int m) {
    Family f{Kind::kAdditiveRatio, n, m};
    f.alpha = std::move(alpha);
    return f;
  }
  static Family capped_additive(int n, int m) { return {Kind::kCappedAdditive, n, m}; }
  static Family max_of_additive(int n, int m) { return {Kind::kMaxOfAdditive, n, m}; }
  static Family k_partial_ido(int k, int n, int m) {
    Family f{Kind::kPartialIdo, n, m};
    f.k = k;
    return f;
  }
  static Family identical_groups(std::vector<int> sizes, int m) {
    Family f{Kind::kIdenticalGroups, 0, m};
    f.sizes = std::move(sizes);
    f.n = std::accumulate(f.sizes.begin(), f.sizes.end(), 0);
    return f;
  }
  // Group 1 general monotone, group 2 additive with ratio at most 2, group 3
  // (at most one agent) general monotone. Agents are numbered group by group.
  static Family tefx_groups(std::vector<int> sizes, int m) {
    Family f = identical_groups(std::move(sizes), m);
    f.kind = Kind::kTefxGroups;
    return f;
  }
  static Family counterexample(Rational m1, Rational m2) {
    Family f{Kind::kCounterexample, 3, 6};
    f.m1 = std::move(m1);
    f.m2 = std::move(m2);
    return f;
  }
};

// The three-agent, six-chore instance with a tie between chores 4 and 5 for
// agent 3. Requires m1/2 > m2 > 6.
inline Instance counterexample_instance(const Rational& m1, const Rational& m2) {
  if (!(m1 / Rational(2) > m2 && m2 > Rational(6))) {
    throw InvalidInput("counterexample requires m1/2 > m2 > 6");
  }
  const Rational half(1, 2);
  std::vector<CostOracle> oracles{
      CostOracle::additive({10, 6, 4, half, half, 3}),
      CostOracle::additive({6, 10, 3, 2, 2, Rational(3, 2)}),
      CostOracle::additive({1, 3, 4, m1 / Rational(2), m1 / Rational(2), m2}),
  };
  return Instance(6, std::move(oracles));
}

namespace detail {

class CostSampler {
 public:
  explicit CostSampler(std::uint64_t seed) : rng_(seed) {}

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  // Positive cost on the grid 1/10, ..., 100.
  Rational cost() { return Rational(uniform(1, 1000), 10); }

  std::vector<Rational> costs(int m) {
    std::vector<Rational> out;
    for (int c = 0; c < m; ++c) out.push_back(cost());
    return out;
  }

  // Costs in [1, alpha] on a grid of 1000 steps.
  std::vector<Rational> ratio_costs(int m, const Rational& alpha) {
    std::vector<Rational> out;
    for (int c = 0; c < m; ++c) out.push_back(Rational(1) + (alpha - Rational(1)) * Rational(uniform(0, 1000), 1000));
    return out;
  }

  CostOracle capped(int m) {
    auto cs = costs(m);
    Rational total(0);
    Rational top(0);
    for (const auto& c : cs) {
      total += c;
      top = max(top, c);
    }
    Rational cap = max(top, total * Rational(uniform(50, 90), 100));
    return CostOracle(CappedAdditive{std::move(cs), std::move(cap)});
  }

  CostOracle max_of_additive(int m) {
    const long rows = uniform(2, 3);
    MaxOfAdditive mx;
    for (long r = 0; r < rows; ++r) mx.rows.push_back(costs(m));
    return CostOracle(std::move(mx));
  }

  // T(S) = max over c in S of T(S \ c) plus a positive increment.
  CostOracle table(int m) {
    if (m > 14) throw InvalidInput("random table oracles limited to 14 chores");
    const std::size_t total = std::size_t{1} << m;
    std::vector<Rational> values(total);
    for (std::size_t mask = 1; mask < total; ++mask) {
      Rational best(0);
      ChoreSet(mask).for_each([&](Chore c) { best = max(best, values[mask & ~(std::size_t{1} << c)]); });
      values[mask] = best + Rational(uniform(1, 100), 10);
    }
    return CostOracle(TabulatedMonotone{std::move(values)});
  }

  CostOracle general_monotone(int m) {
    const long pick = uniform(0, m <= 12 ? 3 : 2);
    switch (pick) {
      case 0: return CostOracle::additive(costs(m));
      case 1: return capped(m);
      case 2: return max_of_additive(m);
      default: return table(m);
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline void check_shape(int n, int m) {
  if (n < 1) throw InvalidInput("family needs at least one agent");
  if (m < 1 || m > kMaxChores) throw InvalidInput("chore count out of range");
}

inline void check_sizes(const std::vector<int>& sizes) {
  if (sizes.empty()) throw InvalidInput("group sizes must not be empty");
  for (int s : sizes) {
    if (s < 0) throw InvalidInput("negative group size");
  }
  if (std::accumulate(sizes.begin(), sizes.end(), 0) < 1) throw InvalidInput("groups contain no agents");
}

}  // namespace detail

inline Instance generate_instance(const Family& f, std::uint64_t seed) {
  using Kind = Family::Kind;
  if (f.kind == Kind::kCounterexample) return counterexample_instance(f.m1, f.m2);
  detail::check_shape(f.n, f.m);
  detail::CostSampler rng(seed);
  std::vector<CostOracle> oracles;

  switch (f.kind) {
    case Kind::kAdditive:
      for (int i = 0; i < f.n; ++i) oracles.push_back(CostOracle::additive(rng.costs(f.m)));
      break;

    case Kind::kAdditiveRatio: {
      if (f.alpha < Rational(1)) throw InvalidInput("ratio bound must be at least 1");
      for (int i = 0; i < f.n; ++i) oracles.push_back(CostOracle::additive(rng.ratio_costs(f.m, f.alpha)));
      Instance inst(f.m, std::move(oracles));
      for (const auto& o : inst.oracles()) {
        if (f.alpha < ratio_bound(o)) throw GuaranteeViolation("generated oracle exceeds its ratio bound");
      }
      return inst;
    }

    case Kind::kCappedAdditive:
      for (int i = 0; i < f.n; ++i) oracles.push_back(rng.capped(f.m));
      break;

    case Kind::kMaxOfAdditive:
      for (int i = 0; i < f.n; ++i) oracles.push_back(rng.max_of_additive(f.m));
      break;

    case Kind::kPartialIdo: {
      if (f.k < 1) throw InvalidInput("k must be at least 1");
      const int top = std::min(f.k, f.m);
      std::vector<Chore> perm(static_cast<std::size_t>(f.m));
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng.engine());
      for (int i = 0; i < f.n; ++i) {
        // Shared top chores get distinct values above every other chore.
        std::set<long, std::greater<>> picks;
        while (static_cast<int>(picks.size()) < top) picks.insert(rng.uniform(1001, 2000));
        auto costs = rng.costs(f.m);
        int t = 0;
        for (long v : picks) costs[static_cast<std::size_t>(perm[static_cast<std::size_t>(t++)])] = Rational(v, 10);
        if (rng.uniform(0, 1) == 0) {
          oracles.push_back(CostOracle::additive(std::move(costs)));
        } else {
          // Cap above the sum of the top chores keeps their singleton order.
          Rational total(0);
          for (const auto& c : costs) total += c;
          Rational cap = max(Rational(200), total * Rational(rng.uniform(50, 90), 100));
          oracles.push_back(CostOracle(CappedAdditive{std::move(costs), std::move(cap)}));
        }
      }
      Instance inst(f.m, std::move(oracles));
      if (!check_k_partial_ido(inst, f.k)) throw GuaranteeViolation("generated instance is not k-partial-IDO");
      return inst;
    }

    case Kind::kIdenticalGroups:
    case Kind::kTefxGroups: {
      detail::check_sizes(f.sizes);
      if (f.kind == Kind::kTefxGroups) {
        if (f.sizes.size() > 3) throw InvalidInput("at most three groups");
        if (f.sizes.size() == 3 && f.sizes[2] > 1) throw InvalidInput("group 3 holds at most one agent");
      }
      for (std::size_t g = 0; g < f.sizes.size(); ++g) {
        CostOracle shared = f.kind == Kind::kIdenticalGroups ? CostOracle::additive(rng.costs(f.m))
                            : g == 1                         ? CostOracle::additive(rng.ratio_costs(f.m, Rational(2)))
                                                             : rng.general_monotone(f.m);
        for (int a = 0; a < f.sizes[g]; ++a) oracles.push_back(shared);
      }
      break;
    }

    case Kind::kCounterexample:
      break;
  }
  return Instance(f.m, std::move(oracles));
}

}  // namespace chorefair
