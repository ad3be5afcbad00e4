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

// JSON encoding of instances, allocations and fairness reports. Rationals are
// strings and chore or agent indices are 1-based.

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "chorefair/envy_graph.hpp"
#include "chorefair/fairness.hpp"

namespace chorefair {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

namespace detail {

inline Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw InvalidInput("rationals must be encoded as strings, got " + j.dump());
  return Rational::parse(j.get<std::string>());
}

inline std::vector<Rational> rationals_from_json(const Json& j, int m, const char* what) {
  if (!j.is_array()) throw InvalidInput(std::string(what) + " must be an array");
  if (static_cast<int>(j.size()) != m) throw InvalidInput(std::string(what) + " must have m entries");
  std::vector<Rational> out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

inline Json rationals_to_json(const std::vector<Rational>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(x.str());
  return out;
}

// "1,3,4" for {c1, c3, c4}; "" for the empty set.
inline std::string subset_key(ChoreSet s) {
  std::string out;
  s.for_each([&](Chore c) { out += (out.empty() ? "" : ",") + std::to_string(c + 1); });
  return out;
}

inline ChoreSet parse_subset_key(const std::string& key, int m) {
  ChoreSet s;
  if (key.empty()) return s;
  std::stringstream ss(key);
  std::string part;
  int prev = 0;
  while (std::getline(ss, part, ',')) {
    std::size_t used = 0;
    int c = 0;
    try {
      c = std::stoi(part, &used);
    } catch (const std::exception&) {
      throw InvalidInput("bad subset key \"" + key + "\"");
    }
    if (used != part.size() || c < 1 || c > m || c <= prev) {
      throw InvalidInput("subset key \"" + key + "\" is not a sorted list of chores in 1..m");
    }
    s.insert(c - 1);
    prev = c;
  }
  return s;
}

inline ChoreSet chores_from_json(const Json& j, int m) {
  if (!j.is_array()) throw InvalidInput("bundle must be an array of chore indices");
  ChoreSet s;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw InvalidInput("chore index must be an integer");
    const int c = x.get<int>();
    if (c < 1 || c > m) throw InvalidInput("chore index " + std::to_string(c) + " out of range");
    if (s.contains(c - 1)) throw InvalidInput("chore " + std::to_string(c) + " listed twice");
    s.insert(c - 1);
  }
  return s;
}

inline Json chores_to_json(ChoreSet s) {
  Json out = Json::array();
  s.for_each([&](Chore c) { out.push_back(c + 1); });
  return out;
}

}  // namespace detail

inline Json oracle_to_json(const CostOracle& o) {
  return std::visit(
      [&](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Additive>) {
          return {{"type", "additive"}, {"costs", detail::rationals_to_json(v.costs)}};
        } else if constexpr (std::is_same_v<T, CappedAdditive>) {
          return {{"type", "capped_additive"}, {"costs", detail::rationals_to_json(v.costs)}, {"cap", v.cap.str()}};
        } else if constexpr (std::is_same_v<T, MaxOfAdditive>) {
          Json rows = Json::array();
          for (const auto& r : v.rows) rows.push_back(detail::rationals_to_json(r));
          return {{"type", "max_of_additive"}, {"rows", rows}};
        } else {
          Json values = Json::object();
          for (std::size_t mask = 1; mask < v.values.size(); ++mask) {
            values[detail::subset_key(ChoreSet(mask))] = v.values[mask].str();
          }
          return {{"type", "table"}, {"values", values}};
        }
      },
      o.variant());
}

inline CostOracle oracle_from_json(const Json& j, int m) {
  if (!j.is_object() || !j.contains("type")) throw InvalidInput("oracle descriptor needs a \"type\"");
  const std::string type = j.at("type").get<std::string>();
  if (type == "additive") return CostOracle(Additive{detail::rationals_from_json(j.at("costs"), m, "costs")});
  if (type == "capped_additive") {
    return CostOracle(CappedAdditive{detail::rationals_from_json(j.at("costs"), m, "costs"),
                                     detail::rational_from_json(j.at("cap"))});
  }
  if (type == "max_of_additive") {
    MaxOfAdditive a;
    for (const auto& r : j.at("rows")) a.rows.push_back(detail::rationals_from_json(r, m, "row"));
    return CostOracle(std::move(a));
  }
  if (type == "table") {
    if (m > kMaxTableChores) throw InvalidInput("table oracle limited to 20 chores");
    const std::size_t total = std::size_t{1} << m;
    std::vector<Rational> values(total);
    std::vector<bool> seen(total, false);
    seen[0] = true;
    for (const auto& [key, val] : j.at("values").items()) {
      const auto mask = static_cast<std::size_t>(detail::parse_subset_key(key, m).bits());
      values[mask] = detail::rational_from_json(val);
      seen[mask] = true;
    }
    for (std::size_t mask = 0; mask < total; ++mask) {
      if (!seen[mask]) {
        throw InvalidInput("table misses subset {" + detail::subset_key(ChoreSet(mask)) + "}");
      }
    }
    return CostOracle(TabulatedMonotone{std::move(values)});
  }
  throw InvalidInput("unknown oracle type \"" + type + "\"");
}

inline Json instance_to_json(const Instance& inst) {
  Json agents = Json::array();
  for (const auto& o : inst.oracles()) agents.push_back(oracle_to_json(o));
  return {{"schema_version", kSchemaVersion}, {"m", inst.m()}, {"n", inst.n()}, {"agents", agents}};
}

inline Instance instance_from_json(const Json& j) {
  try {
    if (j.value("schema_version", 0) != kSchemaVersion) throw InvalidInput("unsupported schema_version");
    const int m = j.at("m").get<int>();
    const int n = j.at("n").get<int>();
    if (m < 1 || m > kMaxChores) throw InvalidInput("m out of range");
    const auto& agents = j.at("agents");
    if (!agents.is_array() || static_cast<int>(agents.size()) != n) {
      throw InvalidInput("\"agents\" must list n oracle descriptors");
    }
    std::vector<CostOracle> oracles;
    for (const auto& a : agents) oracles.push_back(oracle_from_json(a, m));
    return Instance(m, std::move(oracles));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed instance: ") + e.what());
  }
}

inline Json allocation_to_json(const Allocation& alloc) {
  Json bundles = Json::array();
  for (const auto& b : alloc.bundles()) bundles.push_back(detail::chores_to_json(b));
  return bundles;
}

// Accepts a bare array of bundles or an object with an "allocation" key.
inline Allocation allocation_from_json(const Json& j, const Instance& inst) {
  try {
    const Json& arr = j.is_object() ? j.at("allocation") : j;
    if (!arr.is_array() || static_cast<int>(arr.size()) != inst.n()) {
      throw InvalidInput("allocation must list n bundles");
    }
    std::vector<ChoreSet> bundles;
    for (const auto& b : arr) bundles.push_back(detail::chores_from_json(b, inst.m()));
    return Allocation(inst.m(), std::move(bundles));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed allocation: ") + e.what());
  }
}

inline Json criterion_to_json(const Criterion& c) {
  if (c.kind == Criterion::Kind::kTefx) return {{"name", "tefx"}};
  return {{"name", c.alpha == Rational(1) ? "efx" : "alpha_efx"}, {"alpha", c.alpha.str()}};
}

inline Json report_to_json(const FairnessReport& r) {
  Json w = Json::array();
  for (const auto& x : r.witnesses) {
    w.push_back({{"i", x.i + 1}, {"j", x.j + 1}, {"c", x.c + 1}, {"lhs", x.lhs.str()}, {"rhs", x.rhs.str()}});
  }
  return {{"criterion", criterion_to_json(r.criterion)}, {"verdict", r.verdict}, {"witnesses", w}};
}

inline Json graph_to_json(const TopTradingGraph& g) {
  Json edges = Json::array();
  for (auto [i, j] : g.edges()) edges.push_back({i + 1, j + 1});
  return edges;
}

inline Json extension_trace_to_json(const ExtensionTrace& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps) {
    steps.push_back({{"cycles_removed", s.cycles_removed},
                     {"graph", graph_to_json(s.graph)},
                     {"sink", s.sink + 1},
                     {"chore", s.chore + 1}});
  }
  return {{"steps", steps}, {"final_graph", graph_to_json(t.final_graph)}};
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

// Writes via a temporary file and a rename so readers never see partial output.
inline void write_json_file(const std::string& path, const Json& j) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw InvalidInput("cannot write " + path);
    out << j.dump(2) << '\n';
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) throw InvalidInput("cannot write " + path);
}

}  // namespace chorefair
