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

// Graph and instance data model shared by every solver.
//
// Vertices are named by strings externally and addressed by dense indices
// internally; the index order (declaration order) is the total vertex order
// used for canonicalization. Parallel copies of an edge are stored as a count.

#ifndef TCTP_CORE_HPP_
#define TCTP_CORE_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <unordered_map>
#include <variant>
#include <vector>

#include "tctp/types.hpp"

namespace tctp {

// Maps vertex names to dense ids.
class VertexNames {
 public:
  VertexNames() = default;
  explicit VertexNames(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(VertexId v) const { return names_.at(v); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<VertexId> find(const std::string& name) const;
  // Throws Error(kUnknownVertex).
  VertexId at(const std::string& name) const;

  friend bool operator==(const VertexNames& a, const VertexNames& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexId> index_;
};

// An undirected time edge {u,v} appearing at `tau` and taking `d` units.
struct TimeEdge {
  VertexId u = 0;
  VertexId v = 0;
  Time tau = 0;
  Time d = 1;
  int copies = 1;

  auto key() const { return std::tie(u, v, tau, d); }
  VertexId other(VertexId x) const { return x == u ? v : u; }
  bool touches(VertexId x) const { return x == u || x == v; }
  friend bool operator==(const TimeEdge&, const TimeEdge&) = default;
};

// Sorts by (u,v,tau,d) with u <= v and merges equal keys by summing copies.
// Validates d >= 1, copies >= 1, u != v.
std::vector<TimeEdge> Canonicalize(std::vector<TimeEdge> edges);

class TemporalGraph {
 public:
  TemporalGraph() = default;
  // Endpoints must be valid ids; edges are canonicalized.
  TemporalGraph(VertexNames names, std::vector<TimeEdge> edges);

  std::size_t num_vertices() const { return names_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  const VertexNames& names() const { return names_; }
  const std::vector<TimeEdge>& edges() const { return edges_; }
  const TimeEdge& edge(EdgeId e) const { return edges_.at(e); }

  // Edge ids touching v, ordered by (tau, id).
  std::span<const EdgeId> incident(VertexId v) const { return incident_.at(v); }

  // Either orientation.
  std::optional<EdgeId> find_edge(VertexId a, VertexId b, Time tau,
                                  Time d) const;

  friend bool operator==(const TemporalGraph& a, const TemporalGraph& b) {
    return a.names_ == b.names_ && a.edges_ == b.edges_;
  }

 private:
  VertexNames names_;
  std::vector<TimeEdge> edges_;
  std::vector<std::vector<EdgeId>> incident_;
};

// Maximum appearance time; 0 for an edgeless graph.
Time Lifespan(const TemporalGraph& g);

struct StaticEdge {
  VertexId u = 0;
  VertexId v = 0;
  Cost weight = 0;
  int copies = 1;

  auto key() const { return std::tie(u, v, weight); }
  VertexId other(VertexId x) const { return x == u ? v : u; }
  friend bool operator==(const StaticEdge&, const StaticEdge&) = default;
};

// Weighted multigraph. Weights may be 0. When undirected, endpoints are
// stored with u <= v; (u,v,w) keys are merged by summing copies.
class StaticGraph {
 public:
  StaticGraph() = default;
  StaticGraph(VertexNames names, std::vector<StaticEdge> edges, bool directed);

  std::size_t num_vertices() const { return names_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  bool directed() const { return directed_; }
  const VertexNames& names() const { return names_; }
  const std::vector<StaticEdge>& edges() const { return edges_; }
  const StaticEdge& edge(EdgeId e) const { return edges_.at(e); }

  // Edges Traveller can leave v along: arcs with tail v when directed, all
  // incident edges otherwise.
  std::span<const EdgeId> out_edges(VertexId v) const { return out_.at(v); }
  // Every edge touching v.
  std::span<const EdgeId> incident(VertexId v) const { return incident_.at(v); }
  // The endpoint reached by leaving `from` along e.
  VertexId head(EdgeId e, VertexId from) const;

  std::optional<EdgeId> find_edge(VertexId a, VertexId b, Cost weight) const;

  friend bool operator==(const StaticGraph& a, const StaticGraph& b) {
    return a.directed_ == b.directed_ && a.names_ == b.names_ &&
           a.edges_ == b.edges_;
  }

 private:
  VertexNames names_;
  std::vector<StaticEdge> edges_;
  bool directed_ = false;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<std::vector<EdgeId>> incident_;
};

enum class Model { kTemporal, kStatic, kDag };

const char* ToString(Model model);
std::optional<Model> ParseModel(const std::string& tag);

struct Instance {
  Model model = Model::kTemporal;
  std::variant<TemporalGraph, StaticGraph> graph;
  VertexId source = 0;
  VertexId target = 0;
  int k = 0;
  std::optional<Time> deadline;

  const TemporalGraph& temporal() const;
  const StaticGraph& static_graph() const;
  const VertexNames& names() const;
  std::size_t num_vertices() const { return names().size(); }

  friend bool operator==(const Instance&, const Instance&) = default;
};

// Builds and validates an instance; a kDag model requires a directed graph
// and kStatic an undirected one.
Instance MakeTemporalInstance(TemporalGraph g, const std::string& s,
                              const std::string& t, int k,
                              std::optional<Time> deadline = std::nullopt);
Instance MakeStaticInstance(StaticGraph g, const std::string& s,
                            const std::string& t, int k,
                            std::optional<Time> deadline = std::nullopt);

// One crossing of a walk: leave `from` at `tau` along the time edge
// {from,to,tau,d}, arriving at tau + d.
struct WalkStep {
  VertexId from = 0;
  VertexId to = 0;
  Time tau = 0;
  Time d = 1;

  Time arrival() const { return tau + d; }
  friend bool operator==(const WalkStep&, const WalkStep&) = default;
};

struct TemporalWalk {
  VertexId start = 0;
  std::vector<WalkStep> steps;

  VertexId end() const { return steps.empty() ? start : steps.back().to; }
  friend bool operator==(const TemporalWalk&, const TemporalWalk&) = default;
};

struct WalkCheck {
  bool valid = true;
  // Index of the first offending step.
  std::optional<std::size_t> first_violation;
  std::string reason;

  explicit operator bool() const { return valid; }
};

WalkCheck ValidateWalk(const TemporalGraph& g, const TemporalWalk& w);

}  // namespace tctp

#endif  // TCTP_CORE_HPP_
