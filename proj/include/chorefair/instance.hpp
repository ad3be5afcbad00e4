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
#include <utility>
#include <vector>

#include "chorefair/chore_set.hpp"
#include "chorefair/errors.hpp"
#include "chorefair/oracle.hpp"

namespace chorefair {

// m chores shared by n agents, one cost oracle per agent.
class Instance {
 public:
  Instance(int m, std::vector<CostOracle> oracles) : m_(m), oracles_(std::move(oracles)) {
    if (m_ < 1 || m_ > kMaxChores) throw InvalidInput("chore count out of range");
    if (oracles_.empty()) throw InvalidInput("instance needs at least one agent");
    for (const auto& o : oracles_) {
      if (o.chore_count() != m_) throw InvalidInput("oracle chore count differs from instance");
    }
  }

  int m() const { return m_; }
  int n() const { return static_cast<int>(oracles_.size()); }
  const std::vector<CostOracle>& oracles() const { return oracles_; }
  const CostOracle& oracle(Agent i) const { return oracles_.at(static_cast<std::size_t>(i)); }
  Rational cost(Agent i, ChoreSet s) const { return oracle(i).cost(s); }
  ChoreSet all_chores() const { return ChoreSet::full(m_); }

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  int m_;
  std::vector<CostOracle> oracles_;
};

// n pairwise disjoint bundles plus the pool of unallocated chores.
class Allocation {
 public:
  Allocation() = default;

  // Pool is whatever of [m] the bundles leave uncovered.
  Allocation(int m, std::vector<ChoreSet> bundles) : bundles_(std::move(bundles)) {
    ChoreSet used;
    for (const auto& b : bundles_) {
      if (b.intersects(used)) throw InvalidInput("bundles are not disjoint");
      if (b.span() > m) throw InvalidInput("bundle contains a chore outside [m]");
      used |= b;
    }
    pool_ = ChoreSet::full(m) - used;
  }

  static Allocation empty(int m, int n) {
    return Allocation(m, std::vector<ChoreSet>(static_cast<std::size_t>(n)));
  }

  int n() const { return static_cast<int>(bundles_.size()); }
  const std::vector<ChoreSet>& bundles() const { return bundles_; }
  ChoreSet bundle(Agent i) const { return bundles_.at(static_cast<std::size_t>(i)); }
  ChoreSet pool() const { return pool_; }
  bool is_full() const { return pool_.empty(); }

  void give(Agent i, Chore c) {
    if (!pool_.contains(c)) throw InvalidInput("chore is not in the pool");
    pool_.erase(c);
    bundles_.at(static_cast<std::size_t>(i)).insert(c);
  }
  void give(Agent i, ChoreSet s) {
    if (!s.is_subset_of(pool_)) throw InvalidInput("chores are not in the pool");
    pool_ -= s;
    bundles_.at(static_cast<std::size_t>(i)) |= s;
  }
  // Moves c from whichever bundle holds it to agent i.
  void move(Chore c, Agent to) {
    for (auto& b : bundles_) b.erase(c);
    pool_.erase(c);
    bundles_.at(static_cast<std::size_t>(to)).insert(c);
  }
  void swap_bundles(Agent a, Agent b) {
    std::swap(bundles_.at(static_cast<std::size_t>(a)), bundles_.at(static_cast<std::size_t>(b)));
  }
  void set_bundle(Agent i, ChoreSet s) { bundles_.at(static_cast<std::size_t>(i)) = s; }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < bundles_.size(); ++i) {
      if (i) s += ", ";
      s += bundles_[i].str();
    }
    s += ")";
    if (!pool_.empty()) s += " pool " + pool_.str();
    return s;
  }

  friend bool operator==(const Allocation&, const Allocation&) = default;

 private:
  std::vector<ChoreSet> bundles_;
  ChoreSet pool_;
};

inline void check_dimensions(const Allocation& alloc, const Instance& inst) {
  if (alloc.n() != inst.n()) throw InvalidInput("allocation has a different agent count than the instance");
  ChoreSet all;
  for (const auto& b : alloc.bundles()) all |= b;
  all |= alloc.pool();
  if (all != inst.all_chores()) throw InvalidInput("allocation does not partition the instance's chores");
}

}  // namespace chorefair
