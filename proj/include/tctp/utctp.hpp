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

// Uninformed temporal game: Traveller at v at time tau learns only which
// copies of the edges leaving v at exactly tau are blocked.

#ifndef TCTP_UTCTP_HPP_
#define TCTP_UTCTP_HPP_

#include <optional>
#include <utility>

#include "tctp/core.hpp"
#include "tctp/dagctp.hpp"
#include "tctp/expansion.hpp"

namespace tctp {

// Lazily evaluated Traveller strategy: the expansion and its pi table.
struct UStrategy {
  ExpandedDag expansion;
  PiTable pi;
  bool wins = false;
};

// Decides the (t1,t2) window; t2 may be kForever.
UStrategy SolveU(const Instance& inst, Time t1, Time t2);
bool DecideU(const Instance& inst, Time t1, Time t2);

// Smallest t2 with a (0,t2)-winning strategy, scanning arrival events; never
// beyond inst.deadline when one is set. 0 when s == t.
std::optional<Time> EarliestArrival(const Instance& inst);

// Largest t1 with a (t1, deadline-or-forever)-winning strategy, scanning
// departure events. kForever when s == t.
std::optional<Time> LatestDeparture(const Instance& inst);

// Window minimizing t2 - t1, smaller t1 on ties. (0,0) when s == t.
std::optional<std::pair<Time, Time>> ShortestDuration(const Instance& inst);

// Exhaustive play of the uninformed game over (vertex, clock, budget).
// Without limits.override, instances with more than 6 vertices, lifespan
// above 6 or k above 2 are rejected with kSizeLimit.
bool BruteUGame(const Instance& inst, Time t1, Time t2,
                const SearchLimits& limits = {});

}  // namespace tctp

#endif  // TCTP_UTCTP_HPP_
