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

// Built-in Traveller and Blocker policies for the arena. Policies built from
// an instance keep a reference to it.

#ifndef TCTP_POLICIES_HPP_
#define TCTP_POLICIES_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "tctp/arena.hpp"
#include "tctp/core.hpp"
#include "tctp/staticctp.hpp"

namespace tctp {

// Follows a fastest (temporal) or cheapest (static) route that avoids known
// blocked edges and treats undecided edges as open. Stops when none exists.
std::unique_ptr<TravellerPolicy> MakeGreedyTraveller();

// Strategy read from the pi table of the expansion (U model) or of the DAG
// itself (DAG model). Falls back to greedy off the table.
std::unique_ptr<TravellerPolicy> MakeUTraveller(const Instance& inst, Time t1, Time t2);
std::unique_ptr<TravellerPolicy> MakeDagTraveller(const Instance& inst);

// k = 1 locally informed strategy: until a block is seen, move along an edge
// arriving at some w no later than pi1(w); afterwards play greedy.
std::unique_ptr<TravellerPolicy> MakeK1Traveller(const Instance& inst, Time t1, Time t2);

std::unique_ptr<TravellerPolicy> MakeExactLiTraveller(const Instance& inst, Time t1,
                                                      Time t2,
                                                      const SearchLimits& limits = {});
std::unique_ptr<TravellerPolicy> MakeExactStaticTraveller(const Instance& inst,
                                                          const StaticOptions& options = {});
// Replays the MOVE and WAIT events of a transcript, then stops.
std::unique_ptr<TravellerPolicy> MakeScriptedTraveller(const Transcript& t);

std::unique_ptr<BlockerPolicy> MakeNoBlocker();
// Blocks every copy of each offered edge with probability 1/2 while the
// budget allows.
std::unique_ptr<BlockerPolicy> MakeRandomBlocker(std::uint64_t seed);
std::unique_ptr<BlockerPolicy> MakeUBlocker(const Instance& inst, Time t1, Time t2);
std::unique_ptr<BlockerPolicy> MakeDagBlocker(const Instance& inst);
std::unique_ptr<BlockerPolicy> MakeExactLiBlocker(const Instance& inst, Time t1, Time t2,
                                                  const SearchLimits& limits = {});
std::unique_ptr<BlockerPolicy> MakeExactStaticBlocker(const Instance& inst,
                                                      const StaticOptions& options = {});
// Replays the REVEAL events of a transcript, then blocks nothing.
std::unique_ptr<BlockerPolicy> MakeScriptedBlocker(const Transcript& t);

// Named policies for the CLI. Travellers: greedy, strategy, exact, k1.
// Blockers: none, random, strategy, exact. "strategy" is the pi-table policy
// of the U and DAG models, k1 or exact for LI, and exact for STATIC. Throws
// kInvalidArgument for unknown names or a model mismatch.
std::unique_ptr<TravellerPolicy> MakeTraveller(const std::string& name,
                                               const Instance& inst,
                                               const GameRules& rules,
                                               const SearchLimits& limits = {});
std::unique_ptr<BlockerPolicy> MakeBlocker(const std::string& name, const Instance& inst,
                                           const GameRules& rules, std::uint64_t seed,
                                           const SearchLimits& limits = {});

}  // namespace tctp

#endif  // TCTP_POLICIES_HPP_
