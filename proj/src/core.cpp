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

#include "tctp/core.hpp"

#include <algorithm>
#include <utility>

namespace tctp {

const char* ToString(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "INVALID_ARGUMENT";
    case ErrorCode::kParse:
      return "PARSE_ERROR";
    case ErrorCode::kUnknownVertex:
      return "UNKNOWN_VERTEX";
    case ErrorCode::kCycle:
      return "CYCLE";
    case ErrorCode::kNoSafeMove:
      return "NO_SAFE_MOVE";
    case ErrorCode::kSizeLimit:
      return "SIZE_LIMIT";
  }
  return "UNKNOWN";
}

VertexNames::VertexNames(std::vector<std::string> names)
    : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) {
      throw Error(ErrorCode::kInvalidArgument, "empty vertex name");
    }
    auto [it, inserted] =
        index_.emplace(names_[i], static_cast<VertexId>(i));
    if (!inserted) {
      throw Error(ErrorCode::kInvalidArgument,
                  "duplicate vertex name '" + names_[i] + "'");
    }
  }
}

std::optional<VertexId> VertexNames::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexId VertexNames::at(const std::string& name) const {
  auto v = find(name);
  if (!v) throw Error(ErrorCode::kUnknownVertex, "unknown vertex '" + name + "'");
  return *v;
}

std::vector<TimeEdge> Canonicalize(std::vector<TimeEdge> edges) {
  for (TimeEdge& e : edges) {
    if (e.u == e.v) {
      throw Error(ErrorCode::kInvalidArgument, "time edge is a self-loop");
    }
    if (e.d < 1) throw Error(ErrorCode::kInvalidArgument, "time edge has d < 1");
    if (e.tau < 0) {
      throw Error(ErrorCode::kInvalidArgument, "time edge has negative tau");
    }
    if (e.copies < 1) {
      throw Error(ErrorCode::kInvalidArgument, "time edge has copies < 1");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(),
            [](const TimeEdge& a, const TimeEdge& b) { return a.key() < b.key(); });
  std::vector<TimeEdge> merged;
  merged.reserve(edges.size());
  for (const TimeEdge& e : edges) {
    if (!merged.empty() && merged.back().key() == e.key()) {
      merged.back().copies += e.copies;
    } else {
      merged.push_back(e);
    }
  }
  return merged;
}

TemporalGraph::TemporalGraph(VertexNames names, std::vector<TimeEdge> edges)
    : names_(std::move(names)) {
  const auto n = static_cast<VertexId>(names_.size());
  for (const TimeEdge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw Error(ErrorCode::kUnknownVertex, "time edge endpoint out of range");
    }
  }
  edges_ = Canonicalize(std::move(edges));
  incident_.resize(names_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    incident_[edges_[i].u].push_back(static_cast<EdgeId>(i));
    incident_[edges_[i].v].push_back(static_cast<EdgeId>(i));
  }
  for (auto& list : incident_) {
    std::stable_sort(list.begin(), list.end(), [this](EdgeId a, EdgeId b) {
      return edges_[a].tau < edges_[b].tau;
    });
  }
}

std::optional<EdgeId> TemporalGraph::find_edge(VertexId a, VertexId b,
                                               Time tau, Time d) const {
  if (a > b) std::swap(a, b);
  TimeEdge probe{a, b, tau, d, 1};
  auto it = std::lower_bound(
      edges_.begin(), edges_.end(), probe,
      [](const TimeEdge& x, const TimeEdge& y) { return x.key() < y.key(); });
  if (it == edges_.end() || it->key() != probe.key()) return std::nullopt;
  return static_cast<EdgeId>(it - edges_.begin());
}

Time Lifespan(const TemporalGraph& g) {
  Time span = 0;
  for (const TimeEdge& e : g.edges()) span = std::max(span, e.tau);
  return span;
}

StaticGraph::StaticGraph(VertexNames names, std::vector<StaticEdge> edges,
                         bool directed)
    : names_(std::move(names)), directed_(directed) {
  const auto n = static_cast<VertexId>(names_.size());
  for (StaticEdge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw Error(ErrorCode::kUnknownVertex, "edge endpoint out of range");
    }
    if (e.u == e.v) throw Error(ErrorCode::kInvalidArgument, "edge is a self-loop");
    if (e.weight < 0) {
      throw Error(ErrorCode::kInvalidArgument, "edge has negative weight");
    }
    if (e.copies < 1) throw Error(ErrorCode::kInvalidArgument, "edge has copies < 1");
    if (!directed_ && e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(), [](const StaticEdge& a, const StaticEdge& b) {
    return a.key() < b.key();
  });
  for (const StaticEdge& e : edges) {
    if (!edges_.empty() && edges_.back().key() == e.key()) {
      edges_.back().copies += e.copies;
    } else {
      edges_.push_back(e);
    }
  }
  out_.resize(names_.size());
  incident_.resize(names_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto id = static_cast<EdgeId>(i);
    const StaticEdge& e = edges_[i];
    incident_[e.u].push_back(id);
    incident_[e.v].push_back(id);
    out_[e.u].push_back(id);
    if (!directed_) out_[e.v].push_back(id);
  }
}

VertexId StaticGraph::head(EdgeId e, VertexId from) const {
  const StaticEdge& edge = edges_.at(e);
  if (directed_) return edge.v;
  return edge.other(from);
}

std::optional<EdgeId> StaticGraph::find_edge(VertexId a, VertexId b,
                                             Cost weight) const {
  if (!directed_ && a > b) std::swap(a, b);
  StaticEdge probe{a, b, weight, 1};
  auto it = std::lower_bound(
      edges_.begin(), edges_.end(), probe,
      [](const StaticEdge& x, const StaticEdge& y) { return x.key() < y.key(); });
  if (it == edges_.end() || it->key() != probe.key()) return std::nullopt;
  return static_cast<EdgeId>(it - edges_.begin());
}

const char* ToString(Model model) {
  switch (model) {
    case Model::kTemporal:
      return "temporal";
    case Model::kStatic:
      return "static";
    case Model::kDag:
      return "dag";
  }
  return "?";
}

std::optional<Model> ParseModel(const std::string& tag) {
  if (tag == "temporal") return Model::kTemporal;
  if (tag == "static") return Model::kStatic;
  if (tag == "dag") return Model::kDag;
  return std::nullopt;
}

const TemporalGraph& Instance::temporal() const {
  if (const auto* g = std::get_if<TemporalGraph>(&graph)) return *g;
  throw Error(ErrorCode::kInvalidArgument, "instance is not temporal");
}

const StaticGraph& Instance::static_graph() const {
  if (const auto* g = std::get_if<StaticGraph>(&graph)) return *g;
  throw Error(ErrorCode::kInvalidArgument, "instance is not static");
}

const VertexNames& Instance::names() const {
  return std::visit([](const auto& g) -> const VertexNames& { return g.names(); },
                    graph);
}

namespace {

void ResolveEndpoints(Instance& inst, const VertexNames& names,
                      const std::string& s, const std::string& t) {
  auto sv = names.find(s);
  if (!sv) throw Error(ErrorCode::kUnknownVertex, "unknown source vertex '" + s + "'");
  auto tv = names.find(t);
  if (!tv) throw Error(ErrorCode::kUnknownVertex, "unknown target vertex '" + t + "'");
  inst.source = *sv;
  inst.target = *tv;
  if (inst.k < 0) throw Error(ErrorCode::kInvalidArgument, "k must be >= 0");
  if (inst.deadline && *inst.deadline < 0) {
    throw Error(ErrorCode::kInvalidArgument, "deadline must be >= 0");
  }
}

}  // namespace

Instance MakeTemporalInstance(TemporalGraph g, const std::string& s,
                              const std::string& t, int k,
                              std::optional<Time> deadline) {
  Instance inst;
  inst.model = Model::kTemporal;
  inst.k = k;
  inst.deadline = deadline;
  VertexNames names = g.names();
  inst.graph = std::move(g);
  ResolveEndpoints(inst, names, s, t);
  return inst;
}

Instance MakeStaticInstance(StaticGraph g, const std::string& s,
                            const std::string& t, int k,
                            std::optional<Time> deadline) {
  Instance inst;
  inst.model = g.directed() ? Model::kDag : Model::kStatic;
  inst.k = k;
  inst.deadline = deadline;
  VertexNames names = g.names();
  inst.graph = std::move(g);
  ResolveEndpoints(inst, names, s, t);
  return inst;
}

WalkCheck ValidateWalk(const TemporalGraph& g, const TemporalWalk& w) {
  auto fail = [](std::size_t i, std::string why) {
    WalkCheck c;
    c.valid = false;
    c.first_violation = i;
    c.reason = std::move(why);
    return c;
  };
  const auto n = static_cast<VertexId>(g.num_vertices());
  if (w.start < 0 || w.start >= n) return fail(0, "start vertex out of range");
  VertexId at = w.start;
  std::optional<Time> arrived;
  for (std::size_t i = 0; i < w.steps.size(); ++i) {
    const WalkStep& step = w.steps[i];
    if (step.from != at) return fail(i, "step does not leave the current vertex");
    if (step.to < 0 || step.to >= n) return fail(i, "step target out of range");
    if (!g.find_edge(step.from, step.to, step.tau, step.d)) {
      return fail(i, "no such time edge");
    }
    if (arrived && *arrived > step.tau) {
      return fail(i, "departure before arrival");
    }
    arrived = step.arrival();
    at = step.to;
  }
  return WalkCheck{};
}

}  // namespace tctp
