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

#include "tctp/expansion.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace tctp {

std::optional<NodeId> ExpandedDag::find_node(VertexId v, Time time) const {
  auto it = std::lower_bound(
      nodes.begin(), nodes.end() - 1, std::make_pair(v, time),
      [](const ExpNode& n, const std::pair<VertexId, Time>& key) {
        return std::make_pair(n.vertex, n.time) < key;
      });
  if (it == nodes.end() - 1 || it->vertex != v || it->time != time) {
    return std::nullopt;
  }
  return static_cast<NodeId>(it - nodes.begin());
}

std::string ExpandedDag::label(NodeId node, const VertexNames& names) const {
  const ExpNode& n = nodes.at(node);
  if (n.vertex == kNoVertex) return "target";
  return names.name(n.vertex) + "@" + std::to_string(n.time);
}

ExpandedDag BuildExpansion(const TemporalGraph& g, VertexId s, VertexId t,
                           int k, Time t1, Time t2) {
  const auto n = static_cast<VertexId>(g.num_vertices());
  if (s < 0 || s >= n) throw Error(ErrorCode::kUnknownVertex, "unknown source vertex");
  if (t < 0 || t >= n) throw Error(ErrorCode::kUnknownVertex, "unknown target vertex");
  if (t1 > t2) throw Error(ErrorCode::kInvalidArgument, "window has T1 > T2");
  if (k < 0) throw Error(ErrorCode::kInvalidArgument, "k must be >= 0");

  std::vector<EdgeId> kept;
  std::vector<std::pair<VertexId, Time>> keys{{s, t1}};
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    const TimeEdge& e = g.edges()[i];
    if (e.tau < t1 || e.tau > t2 - e.d) continue;
    kept.push_back(static_cast<EdgeId>(i));
    keys.emplace_back(e.u, e.tau);
    keys.emplace_back(e.v, e.tau);
    keys.emplace_back(e.u, e.tau + e.d);
    keys.emplace_back(e.v, e.tau + e.d);
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

  ExpandedDag x;
  x.t1 = t1;
  x.t2 = t2;
  for (const auto& [v, time] : keys) x.nodes.push_back(ExpNode{v, time});
  x.nodes.push_back(ExpNode{kNoVertex, 0});
  x.target = static_cast<NodeId>(x.nodes.size() - 1);
  x.source = *x.find_node(s, t1);

  std::vector<Arc> arcs;
  std::vector<int> group_copies;
  auto add = [&](NodeId a, NodeId b, Cost w, int group, ArcKind kind, EdgeId e) {
    arcs.push_back(Arc{a, b, w, group});
    x.kind.push_back(kind);
    x.edge.push_back(e);
  };
  for (EdgeId e : kept) {
    const TimeEdge& te = g.edge(e);
    const int group = static_cast<int>(group_copies.size());
    group_copies.push_back(te.copies);
    add(*x.find_node(te.u, te.tau), *x.find_node(te.v, te.tau + te.d), te.d, group,
        ArcKind::kTravel, e);
    add(*x.find_node(te.v, te.tau), *x.find_node(te.u, te.tau + te.d), te.d, group,
        ArcKind::kTravel, e);
  }
  for (NodeId i = 0; i + 1 < x.target; ++i) {
    if (x.nodes[i].vertex != x.nodes[i + 1].vertex) continue;
    add(i, i + 1, x.nodes[i + 1].time - x.nodes[i].time,
        static_cast<int>(group_copies.size()), ArcKind::kWait, -1);
    group_copies.push_back(k + 1);
  }
  for (NodeId i = 0; i < x.target; ++i) {
    if (x.nodes[i].vertex != t) continue;
    add(i, x.target, 0, static_cast<int>(group_copies.size()), ArcKind::kSink, -1);
    group_copies.push_back(k + 1);
  }
  x.dag = BlockDag(static_cast<int>(x.nodes.size()), std::move(arcs),
                   std::move(group_copies));
  return x;
}

ExpandedDag BuildExpansion(const Instance& inst, Time t1, Time t2) {
  return BuildExpansion(inst.temporal(), inst.source, inst.target, inst.k, t1, t2);
}

TemporalWalk ProjectWalk(const ExpandedDag& x, std::span<const ArcId> path) {
  TemporalWalk walk;
  walk.start = x.nodes.at(x.source).vertex;
  NodeId at = x.source;
  for (ArcId a : path) {
    if (a < 0 || a >= x.dag.num_arcs()) {
      throw Error(ErrorCode::kInvalidArgument, "arc not in expansion");
    }
    const Arc& arc = x.dag.arc(a);
    if (arc.tail != at) {
      throw Error(ErrorCode::kInvalidArgument, "path does not chain");
    }
    if (x.kind[a] == ArcKind::kTravel) {
      const ExpNode& from = x.nodes[arc.tail];
      const ExpNode& to = x.nodes[arc.head];
      walk.steps.push_back(WalkStep{from.vertex, to.vertex, from.time, arc.weight});
    }
    at = arc.head;
  }
  return walk;
}

Instance ExpansionAsInstance(const ExpandedDag& x, const VertexNames& names,
                             int k) {
  std::vector<std::string> labels;
  for (NodeId i = 0; i < static_cast<NodeId>(x.nodes.size()); ++i) {
    labels.push_back(x.label(i, names));
  }
  std::vector<StaticEdge> edges;
  for (const Arc& a : x.dag.arcs()) {
    edges.push_back(StaticEdge{a.tail, a.head, a.weight, x.dag.group_copies(a.group)});
  }
  const std::string source = labels[x.source];
  const std::string target = labels[x.target];
  return MakeStaticInstance(StaticGraph(VertexNames(std::move(labels)),
                                        std::move(edges), /*directed=*/true),
                            source, target, k);
}

}  // namespace tctp
