// Copyright 2026 The tctp Authors
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

#ifndef TCTP_TYPES_HPP_
#define TCTP_TYPES_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace tctp {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;
using Time = std::int64_t;
using Cost = std::int64_t;

inline constexpr VertexId kNoVertex = -1;

// Worst-case cost that Traveller cannot guarantee at all.
inline constexpr Cost kUnreachable = std::numeric_limits<Cost>::max();

// Departure-time sentinels. kNever < every finite time < kForever.
inline constexpr Time kNever = std::numeric_limits<Time>::min();
inline constexpr Time kForever = std::numeric_limits<Time>::max();

// Saturating addition: kUnreachable absorbs.
constexpr Cost AddCost(Cost a, Cost b) {
  if (a == kUnreachable || b == kUnreachable) return kUnreachable;
  return a + b;
}

enum class ErrorCode {
  kInvalidArgument,
  kParse,
  kUnknownVertex,
  kCycle,
  kNoSafeMove,
  kSizeLimit,
};

const char* ToString(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Upper bound on memoized states for the exponential solvers. `override`
// disables the check.
struct SearchLimits {
  std::size_t max_states = 10'000'000;
  bool override = false;
};

}  // namespace tctp

#endif  // TCTP_TYPES_HPP_
