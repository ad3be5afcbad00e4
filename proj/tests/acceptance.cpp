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

// Acceptance run. Prints one PASS/FAIL line per criterion and exits nonzero
// when any criterion fails.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "chorefair.hpp"
#include "reference_checker.hpp"

namespace {

using namespace chorefair;
using chorefair::testing::Assignment;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Every single cycle removal must keep alpha-EFX for
// alpha in {1, 2} whenever it held before.
struct CycleAudit {
  std::uint64_t removals = 0;
  std::uint64_t violations = 0;
  std::string first;

  CycleObserver observer(const Instance& inst) {
    return [this, &inst](const Allocation& before, const Allocation& after) {
      ++removals;
      for (int a : {1, 2}) {
        const Rational alpha(a);
        if (check_alpha_efx(before, inst, alpha).verdict && !check_alpha_efx(after, inst, alpha).verdict) {
          if (violations++ == 0) first = before.str() + " -> " + after.str();
        }
      }
    };
  }
};

struct Line {
  int id;
  bool pass;
  std::string detail;
};

std::vector<Line> g_lines;

void report(int id, bool pass, const std::string& detail) {
  g_lines.push_back({id, pass, detail});
  std::cout << (pass ? "PASS" : "FAIL") << " criterion " << id << ": " << detail << std::endl;
}

std::string seconds(double s) {
  std::ostringstream os;
  os.precision(3);
  os << std::fixed << s << "s";
  return os.str();
}

// 1. Six-chore counterexample.
void criterion1() {
  const auto t0 = Clock::now();
  const RivalRun run = rival_counterexample_run(Rational(26), Rational(12));
  const Allocation own = three_agent_2efx(run.instance);
  const double elapsed = seconds_since(t0);

  const Allocation want_rival(6, {ChoreSet{1}, ChoreSet{2, 3, 4}, ChoreSet{0, 5}});
  const Allocation want_own(6, {ChoreSet{1, 4}, ChoreSet{2, 3, 5}, ChoreSet{0}});
  const std::vector<std::string> want_graphs = {"{1->2}", "{1->2}", "{1->2, 2->3}", "{1->2, 3->1}"};
  std::vector<std::string> graphs;
  for (const auto& g : run.graphs) graphs.push_back(g.str());

  const bool ok = run.allocation == want_rival && graphs == want_graphs && run.ratio == Rational(4) &&
                  Rational(2) < run.ratio && own == want_own && check_efx(own, run.instance).verdict &&
                  elapsed < 1.0;
  report(1, ok,
         "rival " + run.allocation.str() + ", ratio " + run.ratio.str() + ", own " + own.str() + ", " +
             seconds(elapsed));
}

// 2. Three agents with subadditive costs.
void criterion2(CycleAudit& audit) {
  const auto t0 = Clock::now();
  std::map<CaseId, int> hits;
  std::map<std::string, int> paths;
  int failures = 0;
  std::string first_failure;
  const char* names[] = {"additive", "capped_additive", "max_of_additive"};
  for (int fam = 0; fam < 3; ++fam) {
    for (int s = 0; s < 1000; ++s) {
      const int m = 6 + s % 7;
      const Family f = fam == 0   ? Family::additive(3, m)
                       : fam == 1 ? Family::capped_additive(3, m)
                                  : Family::max_of_additive(3, m);
      const std::uint64_t seed = 2000000 + 1000 * static_cast<std::uint64_t>(fam) + static_cast<std::uint64_t>(s);
      const Instance inst = generate_instance(f, seed);
      try {
        ThreeAgentOptions opt;
        opt.observer = audit.observer(inst);
        const auto res = three_agent_2efx_detailed(inst, opt);
        ++paths[res.path];
        if (res.case_id) ++hits[*res.case_id];
        if (!check_alpha_efx(res.allocation, inst, Rational(2)).verdict) throw GuaranteeViolation("not 2-EFX");
      } catch (const std::exception& e) {
        if (failures++ == 0) first_failure = std::string(names[fam]) + " seed " + std::to_string(seed) + ": " + e.what();
      }
    }
  }
  // Small instances: exhaustive search finds an EFX allocation.
  int small_missing = 0;
  for (int s = 0; s < 300; ++s) {
    const int m = 1 + s % 5;
    const Family f = s % 3 == 0 ? Family::additive(3, m) : s % 3 == 1 ? Family::capped_additive(3, m)
                                                                     : Family::max_of_additive(3, m);
    const Instance inst = generate_instance(f, 2100000 + static_cast<std::uint64_t>(s));
    auto found = exhaustive_search(inst, Criterion::efx());
    if (!found || !check_efx(*found, inst).verdict) ++small_missing;
  }
  const double elapsed = seconds_since(t0);
  std::string missing;
  for (CaseId id : kAllCases) {
    if (!hits.count(id)) missing += " " + to_string(id);
  }
  std::string path_str;
  for (const auto& [p, k] : paths) path_str += " " + p + "=" + std::to_string(k);
  const bool ok = failures == 0 && small_missing == 0 && missing.empty() && elapsed < 300;
  report(2, ok,
         "3000 instances, failures " + std::to_string(failures) + ", m<=5 without EFX " +
             std::to_string(small_missing) + ", cases covered " + std::to_string(hits.size()) + "/13" +
             (missing.empty() ? "" : " missing" + missing) + ", paths" + path_str + ", " + seconds(elapsed) +
             (first_failure.empty() ? "" : "; first failure: " + first_failure));
}

// 3. n-1 shared top chores.
void criterion3(CycleAudit& audit) {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(3);
  int failures = 0;
  std::string first_failure;
  for (int s = 0; s < 300; ++s) {
    const int n = 3 + static_cast<int>(rng() % 4);
    const int m = n + static_cast<int>(rng() % static_cast<std::uint64_t>(15 - n));
    const std::uint64_t seed = 3000000 + static_cast<std::uint64_t>(s);
    const Instance inst = generate_instance(Family::k_partial_ido(n - 1, n, m), seed);
    try {
      const auto res = partial_ido_2efx_detailed(inst, audit.observer(inst));
      if (!check_alpha_efx(res.seed, inst, Rational(1)).verdict) throw GuaranteeViolation("seed not EFX");
      if (!res.seed.pool().empty()) {
        for (const auto& r : eligible_sets(res.seed, inst, Rational(1))) {
          if (static_cast<int>(r.size()) < n - 1) throw GuaranteeViolation("eligible set too small");
        }
      }
      if (!check_alpha_efx(res.allocation, inst, Rational(2)).verdict) throw GuaranteeViolation("not 2-EFX");
    } catch (const std::exception& e) {
      if (failures++ == 0) first_failure = "seed " + std::to_string(seed) + ": " + e.what();
    }
  }
  const double elapsed = seconds_since(t0);
  report(3, failures == 0 && elapsed < 120,
         "300 instances, failures " + std::to_string(failures) + ", " + seconds(elapsed) +
             (first_failure.empty() ? "" : "; first failure: " + first_failure));
}

// 4. Three groups and transfer-EFX.
void criterion4(CycleAudit& audit) {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(4);
  int failures = 0;
  std::uint64_t moves = 0;
  std::string first_failure;
  for (int s = 0; s < 300; ++s) {
    std::vector<int> sizes;
    do {
      sizes = {static_cast<int>(rng() % 4), static_cast<int>(rng() % 4), static_cast<int>(rng() % 2)};
    } while (sizes[0] + sizes[1] + sizes[2] < 2);
    const int n = sizes[0] + sizes[1] + sizes[2];
    const int m = n + static_cast<int>(rng() % static_cast<std::uint64_t>(15 - n));
    const std::uint64_t seed = 4000000 + static_cast<std::uint64_t>(s);
    std::vector<int> nonzero;
    for (int x : sizes) nonzero.push_back(x);
    const Instance inst = generate_instance(Family::tefx_groups(nonzero, m), seed);
    try {
      const auto res = tefx_three_group_detailed(inst, contiguous_groups(sizes));
      for (const auto& st : res.trace.steps) {
        ++moves;
        if (!st.invariant1 || !st.invariant2) throw GuaranteeViolation("claim check failed");
        if (st.phi_before != st.phi_after + 1) throw GuaranteeViolation("potential did not drop by one");
      }
      if (!check_tefx(res.allocation, inst).verdict) throw GuaranteeViolation("not tEFX");
      // Cycle removals on the output exercise the observer on this suite too.
      eliminate_top_trading_cycles(res.allocation, inst, audit.observer(inst));
    } catch (const std::exception& e) {
      if (failures++ == 0) first_failure = "seed " + std::to_string(seed) + ": " + e.what();
    }
  }
  const double elapsed = seconds_since(t0);
  report(4, failures == 0 && elapsed < 180,
         "300 instances, " + std::to_string(moves) + " loop moves checked, failures " + std::to_string(failures) +
             ", " + seconds(elapsed) + (first_failure.empty() ? "" : "; first failure: " + first_failure));
}

// 5. Round robin on ratio-bounded additive costs.
void criterion5() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(5);
  int failures = 0;
  std::string first_failure;
  const int alphas[] = {2, 3, 5};
  for (int s = 0; s < 500; ++s) {
    const int alpha = alphas[s % 3];
    const int n = 2 + static_cast<int>(rng() % 5);
    const int m = 2 * n + 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(4 * n));
    const std::uint64_t seed = 5000000 + static_cast<std::uint64_t>(s);
    const Instance inst = generate_instance(Family::additive_ratio(Rational(alpha), n, m), seed);
    const auto [alloc, trace] = round_robin_allocate(inst, identity_order(n));
    const Rational bound = round_robin_bound(Rational(alpha), m, n);
    bool ok = check_alpha_efx(alloc, inst, bound).verdict;
    if (alpha <= 2) ok = ok && check_tefx(alloc, inst).verdict;
    if (!ok && failures++ == 0) first_failure = "seed " + std::to_string(seed);
  }
  const double elapsed = seconds_since(t0);
  report(5, failures == 0 && elapsed < 60,
         "500 instances, failures " + std::to_string(failures) + ", " + seconds(elapsed) +
             (first_failure.empty() ? "" : "; first failure: " + first_failure));
}

// 6. Tie-breaking perturbation.
void criterion6() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(6);
  std::uint64_t order_fail = 0, degenerate = 0, efx_transfer_fail = 0;
  std::uint64_t alpha_transfer_fail[3] = {0, 0, 0};
  std::uint64_t allocations = 0;
  std::string first_alpha;
  for (int s = 0; s < 100; ++s) {
    const int n = 2 + static_cast<int>(rng() % 2);
    const int m = 1 + static_cast<int>(rng() % 7);
    detail::CostSampler sampler(6000000 + static_cast<std::uint64_t>(s));
    std::vector<CostOracle> oracles;
    for (int i = 0; i < n; ++i) oracles.push_back(sampler.general_monotone(m));
    const Instance inst(m, std::move(oracles));
    const auto [pert, params] = perturb_nondegenerate(inst);

    const std::size_t total = std::size_t{1} << m;
    for (int i = 0; i < n; ++i) {
      std::vector<Rational> c, cp;
      for (std::size_t mask = 0; mask < total; ++mask) {
        c.push_back(inst.cost(i, ChoreSet(mask)));
        cp.push_back(pert.cost(i, ChoreSet(mask)));
      }
      for (std::size_t a = 0; a < total; ++a) {
        for (std::size_t b = 0; b < total; ++b) {
          if (c[b] < c[a] && !(cp[b] < cp[a])) ++order_fail;
          if (a != b && cp[a] == cp[b]) ++degenerate;
        }
      }
    }
    testing::for_each_assignment(n, m, [&](const Assignment& asg) {
      ++allocations;
      const Allocation x = testing::from_assignment(asg, n);
      if (check_efx(x, pert).verdict && !check_efx(x, inst).verdict) ++efx_transfer_fail;
      for (int a : {1, 2}) {
        if (check_alpha_efx(x, pert, Rational(a)).verdict && !check_alpha_efx(x, inst, Rational(a)).verdict) {
          if (alpha_transfer_fail[a]++ == 0 && first_alpha.empty()) first_alpha = "alpha " + std::to_string(a) + " " + x.str();
        }
      }
    });
  }
  const double elapsed = seconds_since(t0);
  const bool ok = order_fail == 0 && degenerate == 0 && efx_transfer_fail == 0 && alpha_transfer_fail[1] == 0 &&
                  alpha_transfer_fail[2] == 0 && elapsed < 120;
  report(6, ok,
         "100 instances, order violations " + std::to_string(order_fail) + ", equal perturbed pairs " +
             std::to_string(degenerate) + ", EFX transfer failures " + std::to_string(efx_transfer_fail) +
             ", alpha-EFX transfer failures (alpha=1: " + std::to_string(alpha_transfer_fail[1]) +
             ", alpha=2: " + std::to_string(alpha_transfer_fail[2]) + ") over " + std::to_string(allocations) +
             " allocations, " + seconds(elapsed) + (first_alpha.empty() ? "" : "; first: " + first_alpha));
}

// 7. Checker agreement with the reference enumeration.
void criterion7() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(7);
  std::uint64_t compared = 0, disagreements = 0;
  for (int s = 0; s < 100; ++s) {
    const int m = 1 + static_cast<int>(rng() % 8);
    detail::CostSampler sampler(7000000 + static_cast<std::uint64_t>(s));
    std::vector<CostOracle> oracles;
    for (int i = 0; i < 3; ++i) oracles.push_back(sampler.general_monotone(m));
    const Instance inst(m, std::move(oracles));
    for (int t = 0; t < 200; ++t) {
      Assignment asg(static_cast<std::size_t>(m));
      for (auto& a : asg) a = static_cast<int>(rng() % 4) - 1;  // -1 leaves the chore in the pool
      if (t % 2 == 0) {
        for (auto& a : asg) a = a < 0 ? 0 : a;
      }
      const Allocation x = testing::from_assignment(asg, 3);
      const std::pair<Criterion, bool> checks[] = {
          {Criterion::efx(), testing::ref_alpha_efx(inst, asg, 1)},
          {Criterion::alpha_efx(Rational(2)), testing::ref_alpha_efx(inst, asg, 2)},
          {Criterion::alpha_efx(Rational(3, 2)), testing::ref_alpha_efx(inst, asg, mpq_class(3, 2))},
          {Criterion::tefx(), testing::ref_tefx(inst, asg)},
      };
      for (const auto& [crit, want] : checks) {
        ++compared;
        const auto rep = check(x, inst, crit);
        if (rep.verdict != want || rep.verdict != rep.witnesses.empty()) ++disagreements;
      }
    }
  }
  const double elapsed = seconds_since(t0);
  report(7, disagreements == 0 && elapsed < 120,
         std::to_string(compared) + " verdicts compared, disagreements " + std::to_string(disagreements) + ", " +
             seconds(elapsed));
}

}  // namespace

int main() {
  CycleAudit audit;
  criterion1();
  criterion2(audit);
  criterion3(audit);
  criterion4(audit);
  criterion5();
  criterion6();
  criterion7();
  report(8, audit.violations == 0 && audit.removals > 0,
         std::to_string(audit.removals) + " cycle removals observed, violations " + std::to_string(audit.violations) +
             (audit.first.empty() ? "" : "; first: " + audit.first));
  int failed = 0;
  for (const auto& l : g_lines) failed += l.pass ? 0 : 1;
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
