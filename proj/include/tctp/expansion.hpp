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

// Time-expanded DAG of a temporal instance over a window [T1, T2].
//
// Nodes are (vertex, time) pairs plus one target node. A time edge
// {x,y,tau,d} inside the window yields the arcs (x,tau)->(y,tau+d) and
// (y,tau)->(x,tau+d), both in one block group with the edge's copies.
// Consecutive nodes of a vertex are chained by wait arcs, and every (t,tau)
// node has a weight-0 arc to the target. Wait and sink arcs carry k+1
// copies so they can never be blocked. The cost of any source-to-target path
// is its arrival time minus T1.

#ifndef TCTP_EXPANSION_HPP_
#define TCTP_EXPANSION_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tctp/block_dag.hpp"
#include "tctp/core.hpp"

namespace tctp {

enum class ArcKind { kTravel, kWait, kSink };

struct ExpNode {
  VertexId vertex = kNoVertex;  // kNoVertex for the target node
  Time time = 0;
};

struct ExpandedDag {
  BlockDag dag;
  std::vector<ExpNode> nodes;
  std::vector<ArcKind> kind;     // per arc
  std::vector<EdgeId> edge;      // per arc; -1 unless kTravel
  NodeId source = 0;
  NodeId target = 0;
  Time t1 = 0;
  Time t2 = kForever;

  std::optional<NodeId> find_node(VertexId v, Time time) const;
  // "name@time", or "target".
  std::string label(NodeId node, const VertexNames& names) const;
};

// Throws kInvalidArgument when t1 > t2 and kUnknownVertex for bad s or t.
ExpandedDag BuildExpansion(const TemporalGraph& g, VertexId s, VertexId t,
                           int k, Time t1, Time t2);

ExpandedDag BuildExpansion(const Instance& inst, Time t1, Time t2);

// Maps a source-to-target arc path to the temporal walk it encodes. Throws
// kInvalidArgument if the arcs do not chain from the source.
TemporalWalk ProjectWalk(const ExpandedDag& x, std::span<const ArcId> path);

// The expansion as a dag-model instance with "name@time" vertices. Parallel
// arcs of the same weight are merged, so block groups are not preserved.
Instance ExpansionAsInstance(const ExpandedDag& x, const VertexNames& names,
                             int k);

}  // namespace tctp

#endif  // TCTP_EXPANSION_HPP_
