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

// Command-line driver.
//
// Exit codes: 0 verified, 1 guarantee or verdict failure, 2 bad input.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "chorefair.hpp"

namespace {

using namespace chorefair;

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kBadInput = 2;

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw InvalidInput(std::string("bad ") + what + " \"" + text + "\"");
    }
  }
  return out;
}

void emit(const Json& j, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << '\n';
  } else {
    write_json_file(path, j);
  }
}

Criterion parse_criterion(const std::string& name, const std::string& alpha) {
  if (name == "efx") return Criterion::efx();
  if (name == "tefx") return Criterion::tefx();
  if (name == "alpha_efx") return Criterion::alpha_efx(Rational::parse(alpha));
  throw InvalidInput("unknown criterion \"" + name + "\"");
}

struct SolveArgs {
  std::string instance;
  std::string algorithm;
  std::string output;
  std::string order;
  std::string groups;
  std::string criterion = "efx";
  std::string alpha = "1";
  bool trace = false;
  bool timings = false;
  bool no_fallback = false;
};

int cmd_solve(const SolveArgs& a) {
  const Instance inst = instance_from_json(read_json_file(a.instance));
  const auto start = std::chrono::steady_clock::now();
  Json out;
  out["algorithm"] = a.algorithm;
  Allocation alloc;
  FairnessReport report;
  Json trace;

  if (a.algorithm == "three-agent-2efx") {
    ThreeAgentOptions opt;
    opt.allow_fallback = !a.no_fallback;
    auto res = three_agent_2efx_detailed(inst, opt);
    alloc = res.allocation;
    report = check_alpha_efx(alloc, inst, Rational(2));
    out["path"] = res.path;
    if (res.case_id) out["case"] = to_string(*res.case_id);
    if (a.trace) {
      Json events = Json::array();
      if (res.outcome) {
        for (const auto& e : res.outcome->trace) events.push_back({{"key", e.key}, {"value", e.value}});
      }
      trace = {{"branches", events}, {"extension", extension_trace_to_json(res.extension)}, {"notes", res.notes}};
    }
  } else if (a.algorithm == "partial-ido-2efx") {
    auto res = partial_ido_2efx_detailed(inst);
    alloc = res.allocation;
    report = check_alpha_efx(alloc, inst, Rational(2));
    if (a.trace) {
      trace = {{"seed", allocation_to_json(res.seed)}, {"extension", extension_trace_to_json(res.extension)}};
    }
  } else if (a.algorithm == "round-robin") {
    std::optional<std::vector<Agent>> order;
    if (!a.order.empty()) {
      order.emplace();
      for (int x : parse_int_list(a.order, "order")) order->push_back(x - 1);
    }
    auto res = round_robin_solve(inst, order, !a.no_fallback);
    alloc = res.allocation;
    report = res.tefx_report && res.tefx_report->verdict ? *res.tefx_report : *res.alpha_report;
    out["in_scope"] = res.in_scope;
    out["fallback"] = res.used_fallback;
    if (res.alpha_report) out["alpha_report"] = report_to_json(*res.alpha_report);
    if (res.tefx_report) out["tefx_report"] = report_to_json(*res.tefx_report);
    if (a.trace) {
      trace = Json::array();
      for (const auto& p : res.trace.picks) trace.push_back({p.round + 1, p.agent + 1, p.chore + 1});
    }
    if (!res.in_scope && !report.verdict) {
      out["note"] = "outside guarantee scope";
    }
  } else if (a.algorithm == "tefx-two-group" || a.algorithm == "tefx-three-group") {
    if (a.groups.empty()) throw InvalidInput("--groups is required");
    const auto sizes = parse_int_list(a.groups, "groups");
    const std::size_t want = a.algorithm == "tefx-two-group" ? 2 : 3;
    if (sizes.size() != want) throw InvalidInput("--groups needs " + std::to_string(want) + " sizes");
    auto res = tefx_three_group_detailed(inst, contiguous_groups(sizes));
    alloc = res.allocation;
    report = check_tefx(alloc, inst);
    if (a.trace) {
      trace = Json::array();
      for (const auto& s : res.trace.steps) {
        trace.push_back({{"k", s.k},
                         {"from", s.from + 1},
                         {"to", s.to + 1},
                         {"chore", s.chore + 1},
                         {"phi_before", s.phi_before},
                         {"phi_after", s.phi_after}});
      }
    }
  } else if (a.algorithm == "exhaustive") {
    const Criterion crit = parse_criterion(a.criterion, a.alpha);
    auto found = exhaustive_search(inst, crit);
    if (!found) {
      out["allocation"] = nullptr;
      out["criterion"] = criterion_to_json(crit);
      out["verdict"] = false;
      std::cout << out.dump(2) << '\n';
      if (!a.output.empty()) write_json_file(a.output, out);
      return kFail;
    }
    alloc = *found;
    report = check(alloc, inst, crit);
  } else {
    throw InvalidInput("unknown algorithm \"" + a.algorithm + "\"");
  }

  const auto rep = report_to_json(report);
  out["allocation"] = allocation_to_json(alloc);
  out["pool"] = detail::chores_to_json(alloc.pool());
  out["criterion"] = rep["criterion"];
  out["verdict"] = rep["verdict"];
  out["witnesses"] = rep["witnesses"];
  if (a.trace) out["trace"] = trace;
  if (a.timings) {
    const auto elapsed = std::chrono::steady_clock::now() - start;
    out["timings"] = {{"solve_ms", std::chrono::duration<double, std::milli>(elapsed).count()}};
  }
  emit(out, a.output);
  return report.verdict ? kOk : kFail;
}

int cmd_verify(const std::string& instance, const std::string& allocation, const std::string& criterion,
               const std::string& alpha) {
  const Instance inst = instance_from_json(read_json_file(instance));
  const Allocation alloc = allocation_from_json(read_json_file(allocation), inst);
  const auto report = check(alloc, inst, parse_criterion(criterion, alpha));
  std::cout << report_to_json(report).dump(2) << '\n';
  return report.verdict ? kOk : kFail;
}

struct GenArgs {
  std::string family;
  int n = 3;
  int m = 6;
  std::uint64_t seed = 0;
  std::string alpha = "2";
  int k = 1;
  std::string sizes;
  std::string m1 = "26";
  std::string m2 = "12";
  std::string output;
};

int cmd_gen(const GenArgs& a) {
  Family f;
  if (a.family == "additive") {
    f = Family::additive(a.n, a.m);
  } else if (a.family == "additive_ratio") {
    f = Family::additive_ratio(Rational::parse(a.alpha), a.n, a.m);
  } else if (a.family == "capped_additive") {
    f = Family::capped_additive(a.n, a.m);
  } else if (a.family == "max_of_additive") {
    f = Family::max_of_additive(a.n, a.m);
  } else if (a.family == "k_partial_ido") {
    f = Family::k_partial_ido(a.k, a.n, a.m);
  } else if (a.family == "identical_groups") {
    f = Family::identical_groups(parse_int_list(a.sizes, "sizes"), a.m);
  } else if (a.family == "tefx_groups") {
    f = Family::tefx_groups(parse_int_list(a.sizes, "sizes"), a.m);
  } else if (a.family == "counterexample") {
    f = Family::counterexample(Rational::parse(a.m1), Rational::parse(a.m2));
  } else {
    throw InvalidInput("unknown family \"" + a.family + "\"");
  }
  emit(instance_to_json(generate_instance(f, a.seed)), a.output);
  return kOk;
}

int cmd_repro(const std::string& m1s, const std::string& m2s) {
  const Rational m1 = Rational::parse(m1s);
  const Rational m2 = Rational::parse(m2s);
  const RivalRun rival = rival_counterexample_run(m1, m2);
  const Allocation own = three_agent_2efx(rival.instance);
  const bool own_efx = check_efx(own, rival.instance).verdict;
  const bool own_2efx = check_alpha_efx(own, rival.instance, Rational(2)).verdict;
  const bool rival_2efx = check_alpha_efx(rival.allocation, rival.instance, Rational(2)).verdict;

  std::cout << "rival procedure\n";
  std::cout << "  seed        " << rival.seed.str() << '\n';
  const char* labels[] = {"seed", "after c4", "after c5", "final"};
  for (std::size_t t = 0; t < rival.graphs.size(); ++t) {
    std::cout << "  graph " << (t < 4 ? labels[t] : "?") << ": " << rival.graphs[t].str() << '\n';
  }
  std::cout << "  allocation  " << rival.allocation.str() << '\n';
  std::cout << "  ratio       " << rival.ratio << " (2-EFX " << (rival_2efx ? "true" : "false") << ")\n";
  std::cout << "this library\n";
  std::cout << "  allocation  " << own.str() << '\n';
  std::cout << "  EFX " << (own_efx ? "true" : "false") << ", 2-EFX " << (own_2efx ? "true" : "false") << '\n';
  return Rational(2) < rival.ratio && own_2efx ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Approximately envy-free chore allocation"};
  app.require_subcommand(1);

  SolveArgs sa;
  auto* solve = app.add_subcommand("solve", "Run an allocation algorithm on an instance file");
  solve->add_option("--instance,-i", sa.instance, "Instance JSON")->required();
  solve->add_option("--algorithm,-a", sa.algorithm, "Algorithm")
      ->required()
      ->check(CLI::IsMember({"three-agent-2efx", "partial-ido-2efx", "round-robin", "tefx-two-group",
                             "tefx-three-group", "exhaustive"}));
  solve->add_option("--output,-o", sa.output, "Result JSON (stdout when omitted)");
  solve->add_option("--order", sa.order, "Round-robin agent order, e.g. 2,1,3");
  solve->add_option("--groups", sa.groups, "Group sizes, e.g. 2,2,1");
  solve->add_option("--criterion", sa.criterion, "Exhaustive search criterion: efx, alpha_efx or tefx");
  solve->add_option("--alpha", sa.alpha, "Alpha for alpha_efx");
  solve->add_flag("--trace", sa.trace, "Include the algorithm trace");
  solve->add_flag("--timings", sa.timings, "Include wall-clock timings");
  solve->add_flag("--no-fallback", sa.no_fallback, "Disable fallback strategies");

  std::string vi, va, vc = "efx", valpha = "1";
  auto* verify = app.add_subcommand("verify", "Check an allocation against a fairness criterion");
  verify->add_option("--instance,-i", vi, "Instance JSON")->required();
  verify->add_option("--allocation", va, "Allocation or result JSON")->required();
  verify->add_option("--criterion", vc, "efx, alpha_efx or tefx");
  verify->add_option("--alpha", valpha, "Alpha for alpha_efx");

  GenArgs ga;
  auto* gen = app.add_subcommand("gen", "Generate a seeded instance");
  gen->add_option("--family", ga.family, "Instance family")->required();
  gen->add_option("--n", ga.n, "Agents");
  gen->add_option("--m", ga.m, "Chores");
  gen->add_option("--seed", ga.seed, "Seed");
  gen->add_option("--alpha", ga.alpha, "Ratio bound for additive_ratio");
  gen->add_option("--k", ga.k, "Shared top chores for k_partial_ido");
  gen->add_option("--sizes", ga.sizes, "Group sizes for grouped families");
  gen->add_option("--m1", ga.m1, "Counterexample parameter m1");
  gen->add_option("--m2", ga.m2, "Counterexample parameter m2");
  gen->add_option("--output,-o", ga.output, "Instance JSON (stdout when omitted)");

  std::string rm1 = "26", rm2 = "12";
  auto* repro = app.add_subcommand("repro-counterexample", "Replay the six-chore counterexample");
  repro->add_option("--m1", rm1, "m1");
  repro->add_option("--m2", rm2, "m2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*solve) return cmd_solve(sa);
    if (*verify) return cmd_verify(vi, va, vc, valpha);
    if (*gen) return cmd_gen(ga);
    if (*repro) return cmd_repro(rm1, rm2);
  } catch (const GuaranteeViolation& e) {
    std::cerr << "guarantee violated: " << e.what() << '\n';
    return kFail;
  } catch (const EnumerationLimit& e) {
    std::cerr << "enumeration limit: " << e.what() << '\n';
    return kBadInput;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << '\n';
    return kBadInput;
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kBadInput;
  }
  return kBadInput;
}
