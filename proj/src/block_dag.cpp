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

#include "tctp/block_dag.hpp"

#include <algorithm>
#include <deque>

namespace tctp {

BlockDag::BlockDag(int num_nodes, std::vector<Arc> arcs,
                   std::vector<int> group_copies)
    : num_nodes_(num_nodes),
      arcs_(std::move(arcs)),
      group_copies_(std::move(group_copies)) {
  if (num_nodes_ < 0) throw Error(ErrorCode::kInvalidArgument, "negative node count");
  for (int c : group_copies_) {
    if (c < 1) throw Error(ErrorCode::kInvalidArgument, "group has copies < 1");
  }
  out_.resize(num_nodes_);
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    const Arc& a = arcs_[i];
    if (a.tail < 0 || a.tail >= num_nodes_ || a.head < 0 || a.head >= num_nodes_) {
      throw Error(ErrorCode::kInvalidArgument, "arc endpoint out of range");
    }
    if (a.group < 0 || a.group >= num_groups()) {
      throw Error(ErrorCode::kInvalidArgument, "arc group out of range");
    }
    if (a.weight < 0) throw Error(ErrorCode::kInvalidArgument, "negative arc weight");
    out_[a.tail].push_back(static_cast<ArcId>(i));
  }
  for (const auto& list : out_) {
    std::vector<int> groups;
    for (ArcId a : list) groups.push_back(arcs_[a].group);
    std::sort(groups.begin(), groups.end());
    if (std::adjacent_find(groups.begin(), groups.end()) != groups.end()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "block group repeated among the out-arcs of a node");
    }
  }
}

BlockDag BlockDag::FromStaticGraph(const StaticGraph& g) {
  if (!g.directed()) {
    throw Error(ErrorCode::kInvalidArgument, "DAG solver needs a directed graph");
  }
  std::vector<Arc> arcs;
  std::vector<int> copies;
  for (const StaticEdge& e : g.edges()) {
    arcs.push_back(Arc{e.u, e.v, e.weight, static_cast<int>(copies.size())});
    copies.push_back(e.copies);
  }
  return BlockDag(static_cast<int>(g.num_vertices()), std::move(arcs),
                  std::move(copies));
}

std::optional<std::vector<NodeId>> BlockDag::TopologicalOrder() const {
  std::vector<int> indegree(num_nodes_, 0);
  for (const Arc& a : arcs_) ++indegree[a.head];
  std::deque<NodeId> ready;
  for (NodeId v = 0; v < num_nodes_; ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  std::vector<NodeId> order;
  order.reserve(num_nodes_);
  while (!ready.empty()) {
    NodeId v = ready.front();
    ready.pop_front();
    order.push_back(v);
    for (ArcId a : out_[v]) {
      if (--indegree[arcs_[a].head] == 0) ready.push_back(arcs_[a].head);
    }
  }
  if (static_cast<int>(order.size()) != num_nodes_) return std::nullopt;
  return order;
}

}  // namespace tctp
