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

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>

namespace chorefair {

// Malformed input: bad dimensions, out-of-range chore, unparsable literal.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input is well-formed but violates an algorithm's stated precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An enumeration would exceed its configured size guard.
class EnumerationLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An algorithm produced output that fails its own guarantee. Never expected;
// signals a bug or an oracle that does not meet the declared assumptions.
class GuaranteeViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Value of CHOREFAIR_MAX_ENUM, when set to a positive integer. Overrides
// every enumeration guard in the library.
inline std::optional<std::uint64_t> max_enum_override() {
  const char* raw = std::getenv("CHOREFAIR_MAX_ENUM");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == nullptr || *end != '\0' || v == 0) return std::nullopt;
  return static_cast<std::uint64_t>(v);
}

// Saturating base^exponent, used to size enumerations before running them.
inline std::uint64_t saturating_pow(std::uint64_t base, unsigned exponent) {
  std::uint64_t r = 1;
  for (unsigned k = 0; k < exponent; ++k) {
    if (base != 0 && r > UINT64_MAX / base) return UINT64_MAX;
    r *= base;
  }
  return r;
}

}  // namespace chorefair
