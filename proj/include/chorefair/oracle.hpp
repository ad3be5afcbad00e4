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

#include <algorithm>
#include <numeric>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "chorefair/chore_set.hpp"
#include "chorefair/errors.hpp"
#include "chorefair/rational.hpp"

namespace chorefair {

// C(S) = sum of costs[c] over c in S.
struct Additive {
  std::vector<Rational> costs;
  friend bool operator==(const Additive&, const Additive&) = default;
};

// C(S) = min(sum of costs[c], cap). Monotone and subadditive.
struct CappedAdditive {
  std::vector<Rational> costs;
  Rational cap;
  friend bool operator==(const CappedAdditive&, const CappedAdditive&) = default;
};

// C(S) = max over rows r of sum of rows[r][c]. Monotone and subadditive.
struct MaxOfAdditive {
  std::vector<std::vector<Rational>> rows;
  friend bool operator==(const MaxOfAdditive&, const MaxOfAdditive&) = default;
};

// Explicit value for every subset, indexed by bitmask.
struct TabulatedMonotone {
  std::vector<Rational> values;
  friend bool operator==(const TabulatedMonotone&, const TabulatedMonotone&) = default;
};

inline constexpr int kMaxTableChores = 20;

// Value oracle for one agent's cost function over chores {0, ..., m-1}.
// The empty set always costs zero.
class CostOracle {
 public:
  using Variant = std::variant<Additive, CappedAdditive, MaxOfAdditive, TabulatedMonotone>;

  explicit CostOracle(Additive a) : m_(checked_m(a.costs.size())), v_(std::move(a)) {
    check_nonnegative(std::get<Additive>(v_).costs);
  }
  explicit CostOracle(CappedAdditive a) : m_(checked_m(a.costs.size())), v_(std::move(a)) {
    const auto& capped = std::get<CappedAdditive>(v_);
    check_nonnegative(capped.costs);
    if (capped.cap.sign() < 0) throw InvalidInput("negative cap");
  }
  explicit CostOracle(MaxOfAdditive a) : v_(std::move(a)) {
    const auto& rows = std::get<MaxOfAdditive>(v_).rows;
    if (rows.empty()) throw InvalidInput("max_of_additive needs at least one row");
    m_ = checked_m(rows.front().size());
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != m_) throw InvalidInput("max_of_additive rows differ in length");
      check_nonnegative(row);
    }
  }
  explicit CostOracle(TabulatedMonotone t) : v_(std::move(t)) {
    const auto& values = std::get<TabulatedMonotone>(v_).values;
    const std::size_t sz = values.size();
    if (sz == 0 || (sz & (sz - 1)) != 0) throw InvalidInput("table size must be a power of two");
    m_ = std::countr_zero(sz);
    if (m_ > kMaxTableChores) throw InvalidInput("table oracle limited to 20 chores");
    if (!values[0].is_zero()) throw InvalidInput("table must assign cost 0 to the empty set");
    check_nonnegative(values);
  }

  static CostOracle additive(std::vector<Rational> costs) { return CostOracle(Additive{std::move(costs)}); }

  int chore_count() const { return m_; }
  const Variant& variant() const { return v_; }
  bool is_additive() const { return std::holds_alternative<Additive>(v_); }

  Rational cost(ChoreSet s) const {
    if (s.span() > m_) throw InvalidInput("chore index out of range for oracle");
    if (s.empty()) return Rational(0);
    return std::visit([&](const auto& o) { return eval(o, s); }, v_);
  }
  Rational cost(Chore c) const {
    if (c < 0 || c >= m_) throw InvalidInput("chore index out of range for oracle");
    return cost(ChoreSet::single(c));
  }

  friend bool operator==(const CostOracle& a, const CostOracle& b) {
    return a.m_ == b.m_ && a.v_ == b.v_;
  }

 private:
  static int checked_m(std::size_t m) {
    if (m == 0 || m > static_cast<std::size_t>(kMaxChores)) throw InvalidInput("chore count out of range");
    return static_cast<int>(m);
  }
  static void check_nonnegative(const std::vector<Rational>& xs) {
    for (const auto& x : xs) {
      if (x.sign() < 0) throw InvalidInput("negative cost " + x.str());
    }
  }
  static Rational row_sum(const std::vector<Rational>& row, ChoreSet s) {
    mpq_class acc = 0;
    s.for_each([&](Chore c) { acc += row[static_cast<std::size_t>(c)].raw(); });
    return Rational(std::move(acc));
  }
  static Rational eval(const Additive& a, ChoreSet s) { return row_sum(a.costs, s); }
  static Rational eval(const CappedAdditive& a, ChoreSet s) { return min(row_sum(a.costs, s), a.cap); }
  static Rational eval(const MaxOfAdditive& a, ChoreSet s) {
    Rational best = row_sum(a.rows.front(), s);
    for (std::size_t r = 1; r < a.rows.size(); ++r) {
      Rational v = row_sum(a.rows[r], s);
      if (best < v) best = std::move(v);
    }
    return best;
  }
  static Rational eval(const TabulatedMonotone& t, ChoreSet s) { return t.values[s.bits()]; }

  int m_ = 0;
  Variant v_;
};

// Chores by strictly descending singleton cost; ties go to the lower index.
// Entry t is the (t+1)-th most costly chore for this oracle.
inline std::vector<Chore> top_chore_order(const CostOracle& oracle) {
  const int m = oracle.chore_count();
  std::vector<Rational> single(static_cast<std::size_t>(m));
  for (Chore c = 0; c < m; ++c) single[static_cast<std::size_t>(c)] = oracle.cost(c);
  std::vector<Chore> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Chore a, Chore b) {
    return single[static_cast<std::size_t>(b)] < single[static_cast<std::size_t>(a)];
  });
  return order;
}

// max singleton cost / min singleton cost. Undefined (error) if some chore is free.
inline Rational ratio_bound(const CostOracle& oracle) {
  Rational lo = oracle.cost(0);
  Rational hi = lo;
  for (Chore c = 1; c < oracle.chore_count(); ++c) {
    Rational v = oracle.cost(c);
    if (v < lo) lo = v;
    if (hi < v) hi = v;
  }
  if (lo.is_zero()) throw PreconditionError("ratio bound undefined: some chore has zero cost");
  return hi / lo;
}

}  // namespace chorefair
