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

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "chorefair/errors.hpp"

namespace chorefair {

using Chore = int;  // 0-based internally
using Agent = int;  // 0-based internally

inline constexpr int kMaxChores = 63;

// Subset of chores {0, ..., m-1}, m <= kMaxChores, stored as a bitmask.
class ChoreSet {
 public:
  constexpr ChoreSet() = default;
  constexpr explicit ChoreSet(std::uint64_t bits) : bits_(bits) {}
  ChoreSet(std::initializer_list<Chore> chores) {
    for (Chore c : chores) insert(c);
  }
  explicit ChoreSet(const std::vector<Chore>& chores) {
    for (Chore c : chores) insert(c);
  }

  static ChoreSet full(int m) {
    if (m < 0 || m > kMaxChores) throw InvalidInput("chore count out of range");
    return ChoreSet(m == 0 ? 0 : (~std::uint64_t{0} >> (64 - m)));
  }
  static ChoreSet single(Chore c) { return ChoreSet({c}); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(Chore c) const { return (bits_ >> c) & 1U; }

  void insert(Chore c) {
    if (c < 0 || c >= kMaxChores) throw InvalidInput("chore index out of range");
    bits_ |= std::uint64_t{1} << c;
  }
  void erase(Chore c) { bits_ &= ~(std::uint64_t{1} << c); }

  ChoreSet with(Chore c) const {
    ChoreSet s = *this;
    s.insert(c);
    return s;
  }
  ChoreSet without(Chore c) const {
    ChoreSet s = *this;
    s.erase(c);
    return s;
  }

  constexpr bool is_subset_of(ChoreSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(ChoreSet o) const { return (bits_ & o.bits_) != 0; }
  // Highest chore index plus one; 0 for the empty set.
  constexpr int span() const { return 64 - std::countl_zero(bits_); }

  // Ascending chore indices.
  std::vector<Chore> to_vector() const {
    std::vector<Chore> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(std::countr_zero(b));
    }
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(static_cast<Chore>(std::countr_zero(b)));
  }

  // "{1,3,4}" with 1-based chore labels.
  std::string str() const {
    std::string s = "{";
    bool first = true;
    for_each([&](Chore c) {
      if (!first) s += ",";
      s += std::to_string(c + 1);
      first = false;
    });
    return s + "}";
  }

  friend constexpr ChoreSet operator|(ChoreSet a, ChoreSet b) { return ChoreSet(a.bits_ | b.bits_); }
  friend constexpr ChoreSet operator&(ChoreSet a, ChoreSet b) { return ChoreSet(a.bits_ & b.bits_); }
  friend constexpr ChoreSet operator-(ChoreSet a, ChoreSet b) { return ChoreSet(a.bits_ & ~b.bits_); }
  ChoreSet& operator|=(ChoreSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  ChoreSet& operator-=(ChoreSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }

  friend constexpr bool operator==(ChoreSet, ChoreSet) = default;
  friend constexpr auto operator<=>(ChoreSet, ChoreSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace chorefair
