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

// Exact minimax for the static game. On the first visit to a vertex Blocker
// fixes the status of its undecided edges; statuses never change afterwards.
// Traveller pays the weight of every edge crossed.
//
// The search uses macro moves: Traveller travels along known-open edges by a
// shortest route to the next vertex that still has undecided edges, or to t.
// Partially blocking an edge only wastes budget, so Blocker either blocks
// every copy of an edge or none.

#ifndef TCTP_STATICCTP_HPP_
#define TCTP_STATICCTP_HPP_

#include <memory>
#include <optional>
#include <vector>

#include "tctp/core.hpp"

namespace tctp {

enum class Discovery {
  kIncident,  // every edge touching the vertex
  kTail,      // only arcs leaving the vertex (directed graphs)
};

struct StaticOptions {
  // Defaults to kTail for directed graphs and kIncident otherwise.
  std::optional<Discovery> discovery;
  SearchLimits limits;
};

struct StaticKnowledge {
  VertexId pos = 0;
  int used = 0;
  // Per edge: -1 if undecided, otherwise the number of blocked copies.
  std::vector<int> blocked;
};

// Keeps a reference to `inst`.
class StaticSolver {
 public:
  explicit StaticSolver(const Instance& inst, const StaticOptions& options = {});
  ~StaticSolver();
  StaticSolver(StaticSolver&&) noexcept;
  StaticSolver& operator=(StaticSolver&&) noexcept;

  StaticKnowledge Initial() const;

  // Worst-case cost to t from a position whose reveal is still pending.
  // Exact when at most `bound`; otherwise some lower bound above `bound`.
  Cost ArrivalValue(const StaticKnowledge& k, Cost bound = kUnreachable - 1);
  // Same, after the reveal at k.pos.
  Cost Value(const StaticKnowledge& k, Cost bound = kUnreachable - 1);

  // First edge of an optimal macro move, or nullopt at t or when stranded.
  std::optional<EdgeId> BestEdge(const StaticKnowledge& k);
  // Edges Blocker should block at k.pos to maximize the value.
  std::vector<EdgeId> BestReveal(const StaticKnowledge& k);

  std::size_t states() const;

 private:
  class Impl;
  std::unique_ptr<Impl> impl_;
};

Cost ExactStaticValue(const Instance& inst, const StaticOptions& options = {});
bool DecideStatic(const Instance& inst, Cost deadline,
                  const StaticOptions& options = {});

// Dijkstra distance from s to t using every edge; kUnreachable if none.
Cost StaticShortestPath(const StaticGraph& g, VertexId s, VertexId t);

}  // namespace tctp

#endif  // TCTP_STATICCTP_HPP_
