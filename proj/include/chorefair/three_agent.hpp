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

// 2-EFX for three agents with subadditive costs. The instance is classified
// by how the agents' three most costly chores overlap; each case builds
// either a full 2-EFX allocation or a partial one that the envy-graph
// extension completes.

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chorefair/envy_graph.hpp"
#include "chorefair/exhaustive.hpp"
#include "chorefair/properties.hpp"

namespace chorefair {

enum class CaseId { kA1, kA2, kA3, kB1, kB21, kB221, kB2221, kB2222, kC, kD1, kD21, kD22, kD23 };

inline constexpr std::array<CaseId, 13> kAllCases = {
    CaseId::kA1,    CaseId::kA2,    CaseId::kA3, CaseId::kB1,  CaseId::kB21,  CaseId::kB221, CaseId::kB2221,
    CaseId::kB2222, CaseId::kC,     CaseId::kD1, CaseId::kD21, CaseId::kD22,  CaseId::kD23,
};

inline std::string to_string(CaseId id) {
  switch (id) {
    case CaseId::kA1: return "A1";
    case CaseId::kA2: return "A2";
    case CaseId::kA3: return "A3";
    case CaseId::kB1: return "B1";
    case CaseId::kB21: return "B21";
    case CaseId::kB221: return "B221";
    case CaseId::kB2221: return "B2221";
    case CaseId::kB2222: return "B2222";
    case CaseId::kC: return "C";
    case CaseId::kD1: return "D1";
    case CaseId::kD21: return "D21";
    case CaseId::kD22: return "D22";
    case CaseId::kD23: return "D23";
  }
  return "?";
}

struct BranchEvent {
  std::string key;
  std::string value;
  friend bool operator==(const BranchEvent&, const BranchEvent&) = default;
};
using BranchTrace = std::vector<BranchEvent>;

struct CaseContext {
  // roles[r] is the agent playing role r+1.
  std::array<Agent, 3> roles{0, 1, 2};
  // anchors[r][t] is the (t+1)-th most costly chore of role r+1.
  std::array<std::array<Chore, 3>, 3> anchors{};
  // Most and least costly of role 3's top two chores, under roles 1 and 2.
  std::optional<Chore> b11, b21, b12, b22;
  ChoreSet m_prime;
  std::optional<ChoreSet> d;
};

struct CaseOutcome {
  enum class Kind { kPartialWithProperties, kFull2Efx };
  Kind kind = Kind::kPartialWithProperties;
  Allocation allocation;
  CaseContext context;
  BranchTrace trace;
};

class NoSuchSubset : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

enum class PeelRule {
  kStrict,     // drop d while C(anchor + D - d) > threshold
  kNonStrict,  // drop d while C(anchor + D - d) >= threshold
};

// Greedy peel from D = pool; candidates are scanned in ascending index and
// the scan restarts after each removal.
inline ChoreSet find_subset_D(const CostOracle& oracle, Chore anchor, ChoreSet pool, const Rational& threshold,
                              PeelRule rule = PeelRule::kNonStrict) {
  const ChoreSet a = ChoreSet::single(anchor);
  if (oracle.cost(a | pool) < threshold) throw NoSuchSubset("anchor plus pool stays below the threshold");
  const Rational base = oracle.cost(a);
  if (rule == PeelRule::kNonStrict ? !(base < threshold) : threshold < base) {
    throw PreconditionError("anchor alone already reaches the threshold");
  }
  auto keeps = [&](const Rational& v) { return rule == PeelRule::kNonStrict ? !(v < threshold) : threshold < v; };
  ChoreSet d = pool;
  for (bool removed = true; removed;) {
    removed = false;
    for (Chore c : d.to_vector()) {
      if (keeps(oracle.cost(a | d.without(c)))) {
        d.erase(c);
        removed = true;
        break;
      }
    }
  }
  return d;
}

namespace detail {

inline std::array<std::array<Chore, 3>, 3> top_three(const Instance& inst) {
  std::array<std::array<Chore, 3>, 3> t{};
  for (Agent i = 0; i < 3; ++i) {
    const auto order = top_chore_order(inst.oracle(i));
    for (int k = 0; k < 3; ++k) t[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = order[static_cast<std::size_t>(k)];
  }
  return t;
}

inline int distinct3(Chore a, Chore b, Chore c) { return 1 + (b != a ? 1 : 0) + (c != a && c != b ? 1 : 0); }

// Agents i < j with equal key, and the remaining agent.
template <typename Key>
std::optional<std::array<Agent, 3>> first_equal_pair(Key key) {
  static constexpr std::array<std::array<Agent, 3>, 3> kPairs{{{0, 1, 2}, {0, 2, 1}, {1, 2, 0}}};
  for (const auto& p : kPairs) {
    if (key(p[0]) == key(p[1])) return p;
  }
  return std::nullopt;
}

// Bundles indexed by role, with costs read through the role permutation.
class RoleFrame {
 public:
  RoleFrame(const Instance& inst, const CaseContext& ctx, BranchTrace& trace)
      : inst_(inst), ctx_(ctx), trace_(trace) {}

  Chore c(int role, int rank) const {
    return ctx_.anchors[static_cast<std::size_t>(role - 1)][static_cast<std::size_t>(rank - 1)];
  }
  const CostOracle& oracle(int role) const { return inst_.oracle(ctx_.roles[static_cast<std::size_t>(role - 1)]); }
  Rational cost(int role, ChoreSet s) const { return oracle(role).cost(s); }
  Rational cost(int role, Chore ch) const { return oracle(role).cost(ch); }

  ChoreSet& x(int role) { return x_[static_cast<std::size_t>(role - 1)]; }
  ChoreSet x(int role) const { return x_[static_cast<std::size_t>(role - 1)]; }

  ChoreSet allocated() const { return x_[0] | x_[1] | x_[2]; }
  ChoreSet remaining() const { return inst_.all_chores() - allocated(); }

  void give(int role, Chore ch) {
    if (allocated().contains(ch)) throw GuaranteeViolation("case construction placed a chore twice");
    x(role).insert(ch);
  }
  void give(int role, ChoreSet s) {
    if (allocated().intersects(s)) throw GuaranteeViolation("case construction placed a chore twice");
    x(role) |= s;
  }
  void set(ChoreSet x1, ChoreSet x2, ChoreSet x3) {
    if (x1.intersects(x2) || x1.intersects(x3) || x2.intersects(x3)) {
      throw GuaranteeViolation("case construction produced overlapping bundles");
    }
    x_ = {x1, x2, x3};
  }

  // `chooser` takes the remaining chore most costly to `by`, lowest index on ties.
  void pick(int chooser, int by) {
    std::optional<Chore> best;
    Rational best_cost;
    remaining().for_each([&](Chore ch) {
      Rational v = cost(by, ch);
      if (!best || best_cost < v) {
        best = ch;
        best_cost = std::move(v);
      }
    });
    if (!best) throw GuaranteeViolation("no chore left to pick");
    give(chooser, *best);
    note("pick_role" + std::to_string(chooser), ChoreSet::single(*best).str());
  }

  Rational max_removal(int role) const { return max_removal_cost(oracle(role), x(role)); }
  bool envies(int role, int other) const { return cost(role, x(other)) < cost(role, x(role)); }
  bool strongly_envies(int role, int other) const {
    return Rational(2) * cost(role, x(other)) < max_removal(role);
  }
  bool strongly_envies_someone(int role) const {
    for (int o = 1; o <= 3; ++o) {
      if (o != role && strongly_envies(role, o)) return true;
    }
    return false;
  }

  void note(std::string key, std::string value) { trace_.push_back({std::move(key), std::move(value)}); }

  Allocation to_allocation() const {
    std::vector<ChoreSet> bundles(3);
    for (int r = 0; r < 3; ++r) bundles[static_cast<std::size_t>(ctx_.roles[static_cast<std::size_t>(r)])] = x_[static_cast<std::size_t>(r)];
    return Allocation(inst_.m(), std::move(bundles));
  }

 private:
  const Instance& inst_;
  const CaseContext& ctx_;
  BranchTrace& trace_;
  std::array<ChoreSet, 3> x_{};
};

inline std::string verdict(bool b) { return b ? "holds" : "fails"; }

inline void set_b_symbols(const RoleFrame& f, CaseContext& ctx) {
  const Chore p = f.c(3, 1);
  const Chore q = f.c(3, 2);
  auto split = [&](int role) {
    // Max first; on ties the lower index is the max.
    const Rational cp = f.cost(role, p);
    const Rational cq = f.cost(role, q);
    const bool p_first = cq < cp || (cp == cq && p < q);
    return p_first ? std::pair{p, q} : std::pair{q, p};
  };
  std::tie(ctx.b11, ctx.b21) = split(1);
  std::tie(ctx.b12, ctx.b22) = split(2);
}

inline void solve_b2221(RoleFrame& f, CaseContext& ctx) {
  set_b_symbols(f, ctx);
  const Chore b11 = *ctx.b11;
  const Chore b21 = *ctx.b21;
  f.give(3, f.c(1, 1));
  f.give(1, ChoreSet{b21, f.c(1, 2)});
  f.give(2, b11);
  ctx.m_prime = f.remaining();
  const Rational thr = f.cost(1, f.c(1, 2));
  const ChoreSet anchor = ChoreSet::single(b11);

  if (!(f.cost(1, anchor | ctx.m_prime) < thr)) {
    const ChoreSet d = find_subset_D(f.oracle(1), b11, ctx.m_prime, thr, PeelRule::kStrict);
    ctx.d = d;
    f.note("D", d.str());
    f.give(2, d);
    if (f.envies(2, 1)) {
      f.note("branch", "agent2_envies_agent1_swap");
      f.set(f.x(2), f.x(1), f.x(3));
      if (f.cost(1, f.x(1).without(b11)) == f.max_removal(1)) {
        f.note("peel_bound", verdict(f.cost(1, d) <= Rational(2) * thr));
      }
    } else {
      f.note("branch", "no_envy_keep");
    }
    return;
  }

  f.note("branch", "pool_below_threshold");
  f.give(2, ctx.m_prime);
  if (f.envies(2, 1)) {
    f.note("branch", "agent2_envies_agent1_swap");
    f.set(f.x(2), f.x(1), f.x(3));
  } else if (f.strongly_envies_someone(1)) {
    f.note("branch", "agent1_strong_envy_regroup");
    f.set(ChoreSet{b11, b21} | ctx.m_prime, ChoreSet::single(f.c(1, 2)), ChoreSet::single(f.c(1, 1)));
  }
}

inline void solve_b2222(RoleFrame& f, CaseContext& ctx) {
  set_b_symbols(f, ctx);
  const Chore b11 = *ctx.b11;
  const Chore b21 = *ctx.b21;
  const Chore top2 = f.c(2, 1);     // second most costly for role 1
  const Chore shared1 = f.c(2, 2);  // most costly for role 1
  f.give(3, shared1);
  f.give(1, ChoreSet{b21, top2});
  f.give(2, b11);
  ctx.m_prime = f.remaining();
  if (!f.strongly_envies_someone(1)) {
    f.note("branch", "agent1_content");
    return;
  }
  const Rational thr = f.cost(1, top2);
  const ChoreSet anchor = ChoreSet::single(b11);

  if (!(f.cost(1, anchor | ctx.m_prime) < thr)) {
    const PeelRule rule = f.cost(1, b11) < thr ? PeelRule::kNonStrict : PeelRule::kStrict;
    const ChoreSet d = find_subset_D(f.oracle(1), b11, ctx.m_prime, thr, rule);
    ctx.d = d;
    f.note("D", d.str());
    f.give(2, d);
    if (f.envies(2, 1)) {
      f.note("branch", "agent2_envies_agent1");
      f.set(anchor | d, ChoreSet{shared1, b21}, ChoreSet::single(top2));
      if (f.cost(1, f.x(1).without(b11)) == f.max_removal(1)) {
        f.note("peel_bound", verdict(f.cost(1, d) <= Rational(2) * thr));
      }
    } else if (f.strongly_envies(2, 3)) {
      f.note("branch", "agent2_strong_envy_agent3");
      if (f.oracle(3).cost(d) <= f.cost(3, f.c(3, 2))) {
        f.note("branch", "third_keeps_D");
        f.set(ChoreSet{top2, f.c(3, 1)}, ChoreSet{shared1, f.c(3, 2)}, d);
        const bool ok = f.max_removal(1) <= Rational(2) * f.cost(1, d) &&
                        f.max_removal(2) <= Rational(2) * f.cost(2, d);
        f.note("third_bundle_bound", verdict(ok));
      } else {
        f.note("branch", "first_takes_D");
        f.set(d, ChoreSet{shared1, f.c(3, 1)}, ChoreSet::single(top2));
      }
    } else {
      f.note("branch", "no_envy_keep");
    }
    return;
  }

  f.note("branch", "pool_below_threshold");
  f.set(anchor | ctx.m_prime, ChoreSet{shared1, b21}, ChoreSet::single(top2));
  if (f.strongly_envies(2, 1)) {
    f.note("branch", "agent2_strong_envy_regroup");
    f.set(ChoreSet::single(shared1), ChoreSet{b11, b21} | ctx.m_prime, ChoreSet::single(top2));
  }
}

}  // namespace detail

// Case of a three-agent instance with m >= 6 under the priority A, B, C, D.
inline std::pair<CaseId, CaseContext> classify_case(const Instance& inst) {
  if (inst.n() != 3) throw PreconditionError("case analysis needs exactly three agents");
  if (inst.m() < 6) throw PreconditionError("case analysis needs at least six chores");
  const auto t = detail::top_three(inst);
  auto top = [&](Agent i, int rank) { return t[static_cast<std::size_t>(i)][static_cast<std::size_t>(rank - 1)]; };

  CaseContext ctx;
  auto assign_roles = [&](std::array<Agent, 3> roles) {
    ctx.roles = roles;
    for (int r = 0; r < 3; ++r) ctx.anchors[static_cast<std::size_t>(r)] = t[static_cast<std::size_t>(roles[static_cast<std::size_t>(r)])];
  };
  assign_roles({0, 1, 2});

  const int d1 = detail::distinct3(top(0, 1), top(1, 1), top(2, 1));
  const int d2 = detail::distinct3(top(0, 2), top(1, 2), top(2, 2));

  if (d1 == 1) {
    if (d2 == 1) return {CaseId::kA1, ctx};
    if (d2 == 3) return {CaseId::kA3, ctx};
    assign_roles(*detail::first_equal_pair([&](Agent i) { return top(i, 2); }));
    return {CaseId::kA2, ctx};
  }

  if (auto pair = detail::first_equal_pair([&](Agent i) { return ChoreSet{top(i, 1), top(i, 2)}; })) {
    assign_roles(*pair);
    auto c = [&](int role, int rank) { return ctx.anchors[static_cast<std::size_t>(role - 1)][static_cast<std::size_t>(rank - 1)]; };
    const ChoreSet p{c(3, 1), c(3, 2)};
    if (p.intersects(ChoreSet{c(1, 1), c(1, 2)})) return {CaseId::kB1, ctx};
    if (c(1, 3) != c(2, 3)) return {CaseId::kB21, ctx};
    if (p.contains(c(1, 3))) return {CaseId::kB221, ctx};
    return {c(1, 1) == c(2, 1) ? CaseId::kB2221 : CaseId::kB2222, ctx};
  }

  if (d1 == 2) {
    assign_roles(*detail::first_equal_pair([&](Agent i) { return top(i, 1); }));
    return {CaseId::kC, ctx};
  }

  for (Agent i = 0; i < 3; ++i) {
    for (Agent j = 0; j < 3; ++j) {
      if (i != j && top(i, 1) == top(j, 2)) {
        assign_roles({i, j, 3 - i - j});
        return {CaseId::kD1, ctx};
      }
    }
  }
  if (d2 == 3) return {CaseId::kD21, ctx};
  if (d2 == 1) return {CaseId::kD22, ctx};
  assign_roles(*detail::first_equal_pair([&](Agent i) { return top(i, 2); }));
  return {CaseId::kD23, ctx};
}

// Builds the case's allocation and verifies it: a full allocation must be
// 2-EFX; a partial one must be 2-EFX and leave every pool chore no more
// costly, for each agent, than at least two bundles.
inline CaseOutcome solve_case(const Instance& inst, CaseId id, CaseContext ctx) {
  if (inst.n() != 3 || inst.m() < 6) throw PreconditionError("case analysis needs three agents and six chores");
  CaseOutcome out;
  out.trace.push_back({"case", to_string(id)});
  detail::RoleFrame f(inst, ctx, out.trace);
  auto c = [&](int role, int rank) { return f.c(role, rank); };

  switch (id) {
    case CaseId::kA1:
      f.give(3, c(1, 1));
      f.give(2, c(1, 2));
      f.give(1, ChoreSet{c(1, 3), c(2, 3), c(3, 3)});
      break;
    case CaseId::kA2:
      f.give(1, c(1, 1));
      f.give(3, c(1, 2));
      f.give(2, ChoreSet{c(1, 3), c(2, 3), c(3, 2)});
      break;
    case CaseId::kA3:
      f.give(3, c(1, 1));
      f.give(1, c(2, 2));
      f.give(2, c(1, 2));
      f.pick(1, 3);
      f.pick(2, 3);
      break;
    case CaseId::kB1:
      f.give(3, c(1, 1));
      f.give(2, c(1, 2));
      f.pick(1, 3);
      break;
    case CaseId::kB21: {
      f.give(3, ChoreSet{c(1, 1), c(1, 2)});
      f.give(2, c(1, 3));
      f.give(1, c(2, 3));
      const ChoreSet p{c(3, 1), c(3, 2)};
      for (Chore q : {c(3, 1), c(3, 2)}) {
        if (f.allocated().contains(q)) continue;
        const int role = f.x(1).intersects(p) ? 2 : 1;
        f.give(role, q);
        f.note("place_role" + std::to_string(role), ChoreSet::single(q).str());
      }
      break;
    }
    case CaseId::kB221:
      f.give(3, ChoreSet{c(1, 1), c(1, 2)});
      f.give(2, c(3, 1));
      f.give(1, c(3, 2));
      break;
    case CaseId::kB2221:
      detail::solve_b2221(f, ctx);
      break;
    case CaseId::kB2222:
      detail::solve_b2222(f, ctx);
      break;
    case CaseId::kC:
      f.give(3, c(1, 1));
      f.give(2, c(1, 2));
      f.give(1, c(2, 2));
      f.pick(1, 3);
      f.pick(2, 3);
      break;
    case CaseId::kD1:
      f.give(3, c(1, 1));
      f.give(1, c(2, 1));
      f.give(2, c(1, 2));
      f.pick(1, 3);
      f.pick(2, 3);
      break;
    case CaseId::kD21:
      f.set(ChoreSet{c(2, 1), c(3, 2)}, ChoreSet{c(3, 1), c(1, 2)}, ChoreSet{c(1, 1), c(2, 2)});
      break;
    case CaseId::kD22:
      f.give(3, c(1, 1));
      f.give(2, c(1, 2));
      f.give(1, ChoreSet{c(3, 1), c(2, 1)});
      break;
    case CaseId::kD23:
      f.give(3, c(1, 2));
      f.give(2, c(1, 1));
      f.give(1, c(2, 1));
      f.pick(1, 3);
      f.pick(2, 3);
      break;
  }

  out.allocation = f.to_allocation();
  out.context = ctx;
  out.kind = out.allocation.is_full() ? CaseOutcome::Kind::kFull2Efx : CaseOutcome::Kind::kPartialWithProperties;

  const auto rep = check_alpha_efx(out.allocation, inst, Rational(2));
  bool ok = rep.verdict;
  if (ok && out.kind == CaseOutcome::Kind::kPartialWithProperties) {
    for (bool b : check_partial_property2(out.allocation, inst)) ok = ok && b;
  }
  if (!ok) {
    std::string msg = "case " + to_string(id) + " construction failed verification: " + out.allocation.str();
    for (const auto& e : out.trace) msg += "; " + e.key + "=" + e.value;
    throw GuaranteeViolation(msg);
  }
  return out;
}

struct ThreeAgentOptions {
  bool allow_fallback = true;
  CycleObserver observer;
};

struct ThreeAgentResult {
  Allocation allocation;
  // "exhaustive" (m <= 5), "direct", "perturbed" or "exhaustive_fallback".
  std::string path;
  std::optional<CaseId> case_id;
  std::optional<CaseOutcome> outcome;
  ExtensionTrace extension;
  std::vector<std::string> notes;
};

namespace detail {

inline ThreeAgentResult three_agent_direct(const Instance& inst, const CycleObserver& observer) {
  ThreeAgentResult res;
  auto [id, ctx] = classify_case(inst);
  res.case_id = id;
  res.outcome = solve_case(inst, id, ctx);
  ExtensionOptions opt;
  opt.alpha = Rational(2);
  opt.beta = Rational(1);
  opt.check_preconditions = true;
  opt.observer = observer;
  auto ext = extend_partial(res.outcome->allocation, inst, opt);
  res.allocation = std::move(ext.allocation);
  res.extension = std::move(ext.trace);
  res.path = "direct";
  return res;
}

}  // namespace detail

// 2-EFX allocation for three agents with monotone subadditive costs. Small
// instances (m <= 5) are solved by exhaustive EFX search. When the case
// construction fails verification, which can only happen on instances with
// cost ties, the instance is perturbed to break ties and solved again, and
// exhaustive search is the last resort. The output is always verified.
inline ThreeAgentResult three_agent_2efx_detailed(const Instance& inst, const ThreeAgentOptions& opt = {}) {
  if (inst.n() != 3) throw PreconditionError("three_agent_2efx needs exactly three agents");
  ThreeAgentResult res;
  if (inst.m() <= 5) {
    auto found = exhaustive_search(inst, Criterion::efx());
    if (!found) throw GuaranteeViolation("no EFX allocation found for a three-agent instance with m <= 5");
    res.allocation = std::move(*found);
    res.path = "exhaustive";
  } else {
    std::vector<std::string> failures;
    try {
      res = detail::three_agent_direct(inst, opt.observer);
    } catch (const GuaranteeViolation& e) {
      if (!opt.allow_fallback) throw;
      failures.push_back(std::string("direct: ") + e.what());
    } catch (const PreconditionError& e) {
      if (!opt.allow_fallback) throw;
      failures.push_back(std::string("direct: ") + e.what());
    }
    if (res.path.empty()) {
      try {
        const auto [perturbed, params] = perturb_nondegenerate(inst);
        ThreeAgentResult p = detail::three_agent_direct(perturbed, {});
        if (check_alpha_efx(p.allocation, inst, Rational(2)).verdict) {
          res = std::move(p);
          res.path = "perturbed";
        } else {
          failures.push_back("perturbed: output is not 2-EFX under the original costs");
        }
      } catch (const std::exception& e) {
        failures.push_back(std::string("perturbed: ") + e.what());
      }
    }
    if (res.path.empty()) {
      auto found = exhaustive_search(inst, Criterion::alpha_efx(Rational(2)));
      if (!found) throw GuaranteeViolation("no 2-EFX allocation exists; the oracles violate the assumptions");
      res.allocation = std::move(*found);
      res.path = "exhaustive_fallback";
    }
    res.notes = std::move(failures);
  }
  if (!check_alpha_efx(res.allocation, inst, Rational(2)).verdict) {
    throw GuaranteeViolation("three-agent output is not 2-EFX: " + res.allocation.str());
  }
  return res;
}

inline Allocation three_agent_2efx(const Instance& inst) { return three_agent_2efx_detailed(inst).allocation; }

}  // namespace chorefair
