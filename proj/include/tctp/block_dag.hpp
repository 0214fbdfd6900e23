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

// A weighted directed graph whose arcs are partitioned into block groups.
// Blocker spends one unit of budget per blocked copy of a group; blocking a
// copy removes one copy of every arc in the group. A group may appear at most
// once among the out-arcs of any node.

#ifndef TCTP_BLOCK_DAG_HPP_
#define TCTP_BLOCK_DAG_HPP_

#include <optional>
#include <span>
#include <vector>

#include "tctp/core.hpp"

namespace tctp {

using NodeId = std::int32_t;
using ArcId = std::int32_t;

struct Arc {
  NodeId tail = 0;
  NodeId head = 0;
  Cost weight = 0;
  int group = 0;
};

class BlockDag {
 public:
  BlockDag() = default;
  BlockDag(int num_nodes, std::vector<Arc> arcs, std::vector<int> group_copies);

  // One group per arc, carrying the arc's copy count. Requires a directed
  // graph.
  static BlockDag FromStaticGraph(const StaticGraph& g);

  int num_nodes() const { return num_nodes_; }
  int num_arcs() const { return static_cast<int>(arcs_.size()); }
  int num_groups() const { return static_cast<int>(group_copies_.size()); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const Arc& arc(ArcId a) const { return arcs_.at(a); }
  int copies(ArcId a) const { return group_copies_.at(arcs_.at(a).group); }
  int group_copies(int group) const { return group_copies_.at(group); }
  // Arc ids leaving v, ascending.
  std::span<const ArcId> out(NodeId v) const { return out_.at(v); }

  // Kahn order; nullopt when a cycle exists.
  std::optional<std::vector<NodeId>> TopologicalOrder() const;

 private:
  int num_nodes_ = 0;
  std::vector<Arc> arcs_;
  std::vector<int> group_copies_;
  std::vector<std::vector<ArcId>> out_;
};

}  // namespace tctp

#endif  // TCTP_BLOCK_DAG_HPP_
