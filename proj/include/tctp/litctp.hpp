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

// Locally informed temporal game: on first arrival at v, Blocker fixes and
// reveals the status of every edge incident to v, including later ones.

#ifndef TCTP_LITCTP_HPP_
#define TCTP_LITCTP_HPP_

#include <memory>
#include <optional>
#include <vector>

#include "tctp/core.hpp"

namespace tctp {

// Latest time Traveller can leave v and still reach t by `deadline` in g with
// one copy of edge `removed` deleted (or none when removed < 0), nobody else
// blocking. kNever when no such walk exists; `deadline` when v == t.
Time LatestWalkDeparture(const TemporalGraph& g, VertexId v, VertexId t,
                         Time deadline, EdgeId removed = -1);

// mu(v, e) for an edge e incident to v.
Time ComputeMu(const TemporalGraph& g, VertexId t, Time deadline, VertexId v,
               EdgeId e);

struct Pi1Table {
  Time deadline = kForever;
  std::vector<Time> lambda1;
  std::vector<Time> nu1;
  std::vector<Time> pi1;
  std::vector<VertexId> order;  // extraction order, starting with t
  bool wins = false;
};

struct K1Options {
  Time start = 0;                        // Traveller is at s at this time
  std::optional<Time> deadline;          // overrides inst.deadline
  bool settle_all = false;               // keep extracting after s
};

// Labeling algorithm for k = 1. Throws kInvalidArgument when inst.k != 1.
// wins is start <= pi1(s) under kNever < finite < kForever.
Pi1Table SolveK1(const Instance& inst, const K1Options& options = {});

// Traveller's knowledge in the locally informed game.
struct LiKnowledge {
  VertexId pos = 0;
  Time clock = 0;
  int used = 0;
  // Per graph edge: -1 if undecided, otherwise the number of blocked copies.
  std::vector<int> blocked;
};

// Exact minimax of the locally informed game restricted to the window
// [t1, t2]; states are memoized and limits.max_states bounds the memo.
// Keeps a reference to `inst`.
class LiSolver {
 public:
  LiSolver(const Instance& inst, Time t1, Time t2, const SearchLimits& limits = {});
  ~LiSolver();
  LiSolver(LiSolver&&) noexcept;
  LiSolver& operator=(LiSolver&&) noexcept;

  // Value of the initial position, before Blocker reveals at s.
  bool Wins();
  LiKnowledge Initial() const;

  // Traveller has just arrived at k.pos, whose edges are still undecided.
  bool WinsOnArrival(const LiKnowledge& k);
  // Whether Traveller wins after the reveal at k.pos, and a winning move.
  bool WinsAfterReveal(const LiKnowledge& k);
  std::optional<EdgeId> WinningMove(const LiKnowledge& k);
  // Edges to block at k.pos on arrival; a losing reveal for Traveller when
  // one exists, otherwise the empty set.
  std::vector<EdgeId> BestReveal(const LiKnowledge& k);

  std::size_t states() const;

 private:
  class Impl;
  std::unique_ptr<Impl> impl_;
};

bool ExactLi(const Instance& inst, Time t1, Time t2,
             const SearchLimits& limits = {});

}  // namespace tctp

#endif  // TCTP_LITCTP_HPP_
