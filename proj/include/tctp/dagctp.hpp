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

// Canadian Traveller on a weighted DAG.
//
// Blocker learns nothing new and Traveller discovers the blocked copies of a
// node's out-arcs when arriving at that node. pi_i(v) is the worst-case cost
// from v to the target when Blocker still holds budget i:
//
//   pi_i(t) = 0
//   pi_i(v) = max_{m=0..i} min^{(m+1)} { pi_{i-m}(u) + w(v,u) : arcs v->u }
//
// where min^{(j)} is the j-th smallest value in the multiset holding one
// entry per copy, and is kUnreachable when fewer than j entries exist.

#ifndef TCTP_DAGCTP_HPP_
#define TCTP_DAGCTP_HPP_

#include <span>
#include <vector>

#include "tctp/block_dag.hpp"

namespace tctp {

class PiTable {
 public:
  PiTable() = default;
  PiTable(int num_nodes, int k)
      : k_(k), values_(static_cast<std::size_t>(num_nodes) * (k + 1), kUnreachable) {}

  int k() const { return k_; }
  int num_nodes() const { return static_cast<int>(values_.size()) / (k_ + 1); }
  Cost at(NodeId v, int i) const { return values_.at(index(v, i)); }
  void set(NodeId v, int i, Cost value) { values_.at(index(v, i)) = value; }

  friend bool operator==(const PiTable&, const PiTable&) = default;

 private:
  std::size_t index(NodeId v, int i) const {
    return static_cast<std::size_t>(v) * (k_ + 1) + i;
  }
  int k_ = 0;
  std::vector<Cost> values_;
};

// Throws kCycle if `dag` has a cycle.
PiTable ComputePi(const BlockDag& dag, NodeId target, int k);
// Uses the given topological order; throws kInvalidArgument if it is not one.
PiTable ComputePi(const BlockDag& dag, NodeId target, int k,
                  std::span<const NodeId> topo_order);

inline bool DecideDag(const PiTable& pi, NodeId s, Cost deadline) {
  return pi.at(s, pi.k()) <= deadline;
}

struct ArcBlock {
  ArcId arc = 0;
  int copies = 0;
  friend bool operator==(const ArcBlock&, const ArcBlock&) = default;
};

// Traveller at u has seen `spent_before` copies blocked earlier and
// `newly_blocked` now. Returns the surviving out-arc minimizing
// pi_{k-spent}(head) + weight, lowest arc id on ties. Throws kNoSafeMove when
// every survivor leads to kUnreachable.
ArcId TravellerMove(const BlockDag& dag, const PiTable& pi, NodeId u,
                    int spent_before, std::span<const ArcBlock> newly_blocked);

// Blocker with budget i at u: picks m maximizing the (m+1)-th smallest
// candidate at budget i-m (smallest m on ties) and blocks the m cheapest
// copies.
std::vector<ArcBlock> BlockerMove(const BlockDag& dag, const PiTable& pi,
                                  NodeId u, int budget);

// Exhaustive minimax of the same game, independent of the recurrence.
// Throws kSizeLimit when more than limits.max_states states are memoized.
Cost BruteDagGame(const BlockDag& dag, NodeId s, NodeId target, int k,
                  const SearchLimits& limits = {});

}  // namespace tctp

#endif  // TCTP_DAGCTP_HPP_
