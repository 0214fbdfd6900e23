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

#include "tctp/policies.hpp"

#include <algorithm>
#include <queue>
#include <random>

#include "tctp/block_dag.hpp"
#include "tctp/dagctp.hpp"
#include "tctp/litctp.hpp"
#include "tctp/utctp.hpp"

namespace tctp {
namespace {

// First edge of an earliest-arrival walk from (pos, clock) to t over edges not
// known to be fully blocked; -1 when t is out of reach by the deadline.
EdgeId FastestFirstEdge(const GameView& view) {
  const TemporalGraph& g = view.inst.temporal();
  const GameState& st = view.state;
  std::vector<EdgeId> order(g.num_edges());
  for (EdgeId e = 0; e < static_cast<EdgeId>(order.size()); ++e) order[e] = e;
  std::stable_sort(order.begin(), order.end(),
                   [&](EdgeId a, EdgeId b) { return g.edge(a).tau < g.edge(b).tau; });
  std::vector<Time> arrival(g.num_vertices(), kForever);
  std::vector<EdgeId> first(g.num_vertices(), -1);
  arrival[st.pos] = st.clock;
  for (EdgeId e : order) {
    const TimeEdge& te = g.edge(e);
    if (te.tau < st.clock || !st.open(e, te.copies)) continue;
    for (VertexId from : {te.u, te.v}) {
      if (arrival[from] == kForever || arrival[from] > te.tau) continue;
      const VertexId to = te.other(from);
      if (to == st.pos) continue;
      if (te.tau + te.d < arrival[to]) {
        arrival[to] = te.tau + te.d;
        first[to] = from == st.pos ? e : first[from];
      }
    }
  }
  const VertexId t = view.inst.target;
  if (first[t] < 0 || arrival[t] > view.rules.deadline) return -1;
  return first[t];
}

EdgeId CheapestFirstEdge(const GameView& view) {
  const StaticGraph& g = view.inst.static_graph();
  const GameState& st = view.state;
  std::vector<Cost> dist(g.num_vertices(), kUnreachable);
  std::vector<EdgeId> first(g.num_vertices(), -1);
  using Item = std::pair<Cost, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[st.pos] = st.clock;
  heap.push({st.clock, st.pos});
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (d != dist[u]) continue;
    for (EdgeId e : g.out_edges(u)) {
      if (!st.open(e, g.edge(e).copies)) continue;
      const VertexId v = g.head(e, u);
      const Cost nd = AddCost(d, g.edge(e).weight);
      if (nd < dist[v]) {
        dist[v] = nd;
        first[v] = u == st.pos ? e : first[u];
        heap.push({nd, v});
      }
    }
  }
  const VertexId t = view.inst.target;
  if (first[t] < 0 || dist[t] > view.rules.deadline) return -1;
  return first[t];
}

// Turns a chosen edge into an action, waiting first in the uninformed model.
Action Take(const GameView& view, EdgeId e) {
  if (e < 0) return Action::Stop();
  if (view.rules.model == GameModel::kU) {
    const Time tau = view.inst.temporal().edge(e).tau;
    if (tau > view.state.clock) return Action::Wait(tau);
  }
  return Action::Move(e);
}

class GreedyTraveller : public TravellerPolicy {
 public:
  std::string name() const override { return "greedy"; }
  Action Act(const GameView& view) override {
    if (view.inst.model == Model::kTemporal) return Take(view, FastestFirstEdge(view));
    return Take(view, CheapestFirstEdge(view));
  }
};

// Shared by the U and DAG travellers: reads the pi table at a node.
Action PiMove(const GameView& view, const BlockDag& dag, const PiTable& pi, NodeId node,
              const std::vector<EdgeId>& arc_edge, const std::vector<ArcKind>* kinds,
              const std::vector<ExpNode>* nodes) {
  std::vector<ArcBlock> newly;
  int seen = 0;
  for (ArcId a : dag.out(node)) {
    if (kinds != nullptr && (*kinds)[a] != ArcKind::kTravel) continue;
    const int b = view.state.blocked[arc_edge[a]];
    if (b > 0) {
      newly.push_back(ArcBlock{a, b});
      seen += b;
    }
  }
  const ArcId a = TravellerMove(dag, pi, node, view.state.used - seen, newly);
  if (kinds == nullptr || (*kinds)[a] == ArcKind::kTravel) return Action::Move(arc_edge[a]);
  if ((*kinds)[a] == ArcKind::kWait) return Action::Wait((*nodes)[dag.arc(a).head].time);
  return Action::Stop();
}

class UTraveller : public TravellerPolicy {
 public:
  UTraveller(const Instance& inst, Time t1, Time t2) : strategy_(SolveU(inst, t1, t2)) {}
  std::string name() const override { return "strategy"; }
  Action Act(const GameView& view) override {
    const ExpandedDag& x = strategy_.expansion;
    const auto node = x.find_node(view.state.pos, view.state.clock);
    if (node) {
      try {
        return PiMove(view, x.dag, strategy_.pi, *node, x.edge, &x.kind, &x.nodes);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kNoSafeMove) throw;
      }
    }
    return greedy_.Act(view);
  }

 private:
  UStrategy strategy_;
  GreedyTraveller greedy_;
};

class DagTraveller : public TravellerPolicy {
 public:
  explicit DagTraveller(const Instance& inst)
      : dag_(BlockDag::FromStaticGraph(inst.static_graph())),
        pi_(ComputePi(dag_, inst.target, inst.k)) {
    for (ArcId a = 0; a < dag_.num_arcs(); ++a) identity_.push_back(a);
  }
  std::string name() const override { return "strategy"; }
  Action Act(const GameView& view) override {
    try {
      return PiMove(view, dag_, pi_, view.state.pos, identity_, nullptr, nullptr);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kNoSafeMove) throw;
    }
    return greedy_.Act(view);
  }

 private:
  BlockDag dag_;
  PiTable pi_;
  std::vector<EdgeId> identity_;
  GreedyTraveller greedy_;
};

class K1Traveller : public TravellerPolicy {
 public:
  K1Traveller(const Instance& inst, Time t1, Time t2) {
    K1Options options;
    options.start = t1;
    options.deadline = t2;
    options.settle_all = true;
    table_ = SolveK1(inst, options);
  }
  std::string name() const override { return "k1"; }
  Action Act(const GameView& view) override {
    const GameState& st = view.state;
    if (st.used == 0 && st.clock <= table_.pi1[st.pos]) {
      const TemporalGraph& g = view.inst.temporal();
      EdgeId best = -1;
      for (EdgeId e : g.incident(st.pos)) {
        const TimeEdge& te = g.edge(e);
        if (te.tau < st.clock || !st.open(e, te.copies)) continue;
        const Time limit = table_.pi1[te.other(st.pos)];
        if (limit == kNever || te.tau + te.d > limit) continue;
        if (best < 0 || te.tau > g.edge(best).tau) best = e;
      }
      if (best >= 0) return Action::Move(best);
    }
    return greedy_.Act(view);
  }

 private:
  Pi1Table table_;
  GreedyTraveller greedy_;
};

LiKnowledge ToLi(const GameState& st) {
  return LiKnowledge{st.pos, st.clock, st.used, st.blocked};
}

StaticKnowledge ToStatic(const GameState& st) {
  return StaticKnowledge{st.pos, st.used, st.blocked};
}

class ExactLiTraveller : public TravellerPolicy {
 public:
  ExactLiTraveller(const Instance& inst, Time t1, Time t2, const SearchLimits& limits)
      : solver_(inst, t1, t2, limits) {}
  std::string name() const override { return "exact"; }
  Action Act(const GameView& view) override {
    if (auto e = solver_.WinningMove(ToLi(view.state))) return Action::Move(*e);
    return greedy_.Act(view);
  }

 private:
  LiSolver solver_;
  GreedyTraveller greedy_;
};

class ExactStaticTraveller : public TravellerPolicy {
 public:
  ExactStaticTraveller(const Instance& inst, const StaticOptions& options)
      : solver_(inst, options) {}
  std::string name() const override { return "exact"; }
  Action Act(const GameView& view) override {
    if (auto e = solver_.BestEdge(ToStatic(view.state))) return Action::Move(*e);
    return Action::Stop();
  }

 private:
  StaticSolver solver_;
};

class ScriptedTraveller : public TravellerPolicy {
 public:
  explicit ScriptedTraveller(const Transcript& t) {
    for (const Event& ev : t.events) {
      if (ev.kind == Event::Kind::kMove) actions_.push_back(Action::Move(ev.edge));
      if (ev.kind == Event::Kind::kWait) actions_.push_back(Action::Wait(ev.to_time));
    }
  }
  std::string name() const override { return "transcript"; }
  Action Act(const GameView&) override {
    if (next_ >= actions_.size()) return Action::Stop();
    return actions_[next_++];
  }

 private:
  std::vector<Action> actions_;
  std::size_t next_ = 0;
};

// ---------------------------------------------------------------------------

class NoBlocker : public BlockerPolicy {
 public:
  std::string name() const override { return "none"; }
  std::vector<EdgeBlock> Reveal(const GameView&, std::span<const EdgeId>) override {
    return {};
  }
};

class RandomBlocker : public BlockerPolicy {
 public:
  explicit RandomBlocker(std::uint64_t seed) : rng_(seed) {}
  std::string name() const override { return "random"; }
  std::vector<EdgeBlock> Reveal(const GameView& view,
                                std::span<const EdgeId> offered) override {
    std::vector<EdgeBlock> out;
    int left = view.inst.k - view.state.used;
    for (EdgeId e : offered) {
      const int copies = view.inst.model == Model::kTemporal
                             ? view.inst.temporal().edge(e).copies
                             : view.inst.static_graph().edge(e).copies;
      if (std::bernoulli_distribution(0.5)(rng_) && copies <= left) {
        out.push_back(EdgeBlock{e, copies});
        left -= copies;
      }
    }
    return out;
  }

 private:
  std::mt19937_64 rng_;
};

// Maps BlockerMove output back to edges, keeping only offered ones.
std::vector<EdgeBlock> ArcBlocksToEdges(const std::vector<ArcBlock>& arcs,
                                        const std::vector<EdgeId>& arc_edge,
                                        std::span<const EdgeId> offered) {
  std::vector<EdgeBlock> out;
  for (const ArcBlock& b : arcs) {
    const EdgeId e = arc_edge[b.arc];
    if (e < 0 || std::find(offered.begin(), offered.end(), e) == offered.end()) continue;
    out.push_back(EdgeBlock{e, b.copies});
  }
  return out;
}

class UBlocker : public BlockerPolicy {
 public:
  UBlocker(const Instance& inst, Time t1, Time t2) : strategy_(SolveU(inst, t1, t2)) {}
  std::string name() const override { return "strategy"; }
  std::vector<EdgeBlock> Reveal(const GameView& view,
                                std::span<const EdgeId> offered) override {
    const ExpandedDag& x = strategy_.expansion;
    const auto node = x.find_node(view.state.pos, view.state.clock);
    if (!node) return {};
    return ArcBlocksToEdges(
        BlockerMove(x.dag, strategy_.pi, *node, view.inst.k - view.state.used), x.edge,
        offered);
  }

 private:
  UStrategy strategy_;
};

class DagBlocker : public BlockerPolicy {
 public:
  explicit DagBlocker(const Instance& inst)
      : dag_(BlockDag::FromStaticGraph(inst.static_graph())),
        pi_(ComputePi(dag_, inst.target, inst.k)) {
    for (ArcId a = 0; a < dag_.num_arcs(); ++a) identity_.push_back(a);
  }
  std::string name() const override { return "strategy"; }
  std::vector<EdgeBlock> Reveal(const GameView& view,
                                std::span<const EdgeId> offered) override {
    return ArcBlocksToEdges(
        BlockerMove(dag_, pi_, view.state.pos, view.inst.k - view.state.used), identity_,
        offered);
  }

 private:
  BlockDag dag_;
  PiTable pi_;
  std::vector<EdgeId> identity_;
};

std::vector<EdgeBlock> FullBlocks(const Instance& inst, const std::vector<EdgeId>& edges) {
  std::vector<EdgeBlock> out;
  for (EdgeId e : edges) {
    const int copies = inst.model == Model::kTemporal ? inst.temporal().edge(e).copies
                                                      : inst.static_graph().edge(e).copies;
    out.push_back(EdgeBlock{e, copies});
  }
  return out;
}

class ExactLiBlocker : public BlockerPolicy {
 public:
  ExactLiBlocker(const Instance& inst, Time t1, Time t2, const SearchLimits& limits)
      : solver_(inst, t1, t2, limits) {}
  std::string name() const override { return "exact"; }
  std::vector<EdgeBlock> Reveal(const GameView& view, std::span<const EdgeId>) override {
    return FullBlocks(view.inst, solver_.BestReveal(ToLi(view.state)));
  }

 private:
  LiSolver solver_;
};

class ExactStaticBlocker : public BlockerPolicy {
 public:
  ExactStaticBlocker(const Instance& inst, const StaticOptions& options)
      : solver_(inst, options) {}
  std::string name() const override { return "exact"; }
  std::vector<EdgeBlock> Reveal(const GameView& view, std::span<const EdgeId>) override {
    return FullBlocks(view.inst, solver_.BestReveal(ToStatic(view.state)));
  }

 private:
  StaticSolver solver_;
};

class ScriptedBlocker : public BlockerPolicy {
 public:
  explicit ScriptedBlocker(const Transcript& t) {
    for (const Event& ev : t.events) {
      if (ev.kind != Event::Kind::kReveal) continue;
      std::vector<EdgeBlock> blocks;
      for (std::size_t i = 0; i < ev.edges.size(); ++i) {
        if (ev.statuses[i] > 0) blocks.push_back(EdgeBlock{ev.edges[i], ev.statuses[i]});
      }
      reveals_.push_back(std::move(blocks));
    }
  }
  std::string name() const override { return "transcript"; }
  std::vector<EdgeBlock> Reveal(const GameView&, std::span<const EdgeId>) override {
    if (next_ >= reveals_.size()) return {};
    return reveals_[next_++];
  }

 private:
  std::vector<std::vector<EdgeBlock>> reveals_;
  std::size_t next_ = 0;
};

}  // namespace

std::unique_ptr<TravellerPolicy> MakeGreedyTraveller() {
  return std::make_unique<GreedyTraveller>();
}
std::unique_ptr<TravellerPolicy> MakeUTraveller(const Instance& inst, Time t1, Time t2) {
  return std::make_unique<UTraveller>(inst, t1, t2);
}
std::unique_ptr<TravellerPolicy> MakeDagTraveller(const Instance& inst) {
  return std::make_unique<DagTraveller>(inst);
}
std::unique_ptr<TravellerPolicy> MakeK1Traveller(const Instance& inst, Time t1, Time t2) {
  return std::make_unique<K1Traveller>(inst, t1, t2);
}
std::unique_ptr<TravellerPolicy> MakeExactLiTraveller(const Instance& inst, Time t1,
                                                      Time t2, const SearchLimits& limits) {
  return std::make_unique<ExactLiTraveller>(inst, t1, t2, limits);
}
std::unique_ptr<TravellerPolicy> MakeExactStaticTraveller(const Instance& inst,
                                                          const StaticOptions& options) {
  return std::make_unique<ExactStaticTraveller>(inst, options);
}
std::unique_ptr<TravellerPolicy> MakeScriptedTraveller(const Transcript& t) {
  return std::make_unique<ScriptedTraveller>(t);
}
std::unique_ptr<BlockerPolicy> MakeNoBlocker() { return std::make_unique<NoBlocker>(); }
std::unique_ptr<BlockerPolicy> MakeRandomBlocker(std::uint64_t seed) {
  return std::make_unique<RandomBlocker>(seed);
}
std::unique_ptr<BlockerPolicy> MakeUBlocker(const Instance& inst, Time t1, Time t2) {
  return std::make_unique<UBlocker>(inst, t1, t2);
}
std::unique_ptr<BlockerPolicy> MakeDagBlocker(const Instance& inst) {
  return std::make_unique<DagBlocker>(inst);
}
std::unique_ptr<BlockerPolicy> MakeExactLiBlocker(const Instance& inst, Time t1, Time t2,
                                                  const SearchLimits& limits) {
  return std::make_unique<ExactLiBlocker>(inst, t1, t2, limits);
}
std::unique_ptr<BlockerPolicy> MakeExactStaticBlocker(const Instance& inst,
                                                      const StaticOptions& options) {
  return std::make_unique<ExactStaticBlocker>(inst, options);
}
std::unique_ptr<BlockerPolicy> MakeScriptedBlocker(const Transcript& t) {
  return std::make_unique<ScriptedBlocker>(t);
}

std::unique_ptr<TravellerPolicy> MakeTraveller(const std::string& name,
                                               const Instance& inst,
                                               const GameRules& rules,
                                               const SearchLimits& limits) {
  const GameModel m = rules.model;
  if (name == "greedy") return MakeGreedyTraveller();
  if (name == "k1" && m == GameModel::kLi) return MakeK1Traveller(inst, rules.t1, rules.deadline);
  if (name == "exact" || name == "strategy") {
    switch (m) {
      case GameModel::kLi:
        if (name == "strategy" && inst.k == 1) {
          return MakeK1Traveller(inst, rules.t1, rules.deadline);
        }
        return MakeExactLiTraveller(inst, rules.t1, rules.deadline, limits);
      case GameModel::kU:
        return MakeUTraveller(inst, rules.t1, rules.deadline);
      case GameModel::kDag:
        return MakeDagTraveller(inst);
      case GameModel::kStatic:
        return MakeExactStaticTraveller(inst, StaticOptions{std::nullopt, limits});
    }
  }
  throw Error(ErrorCode::kInvalidArgument,
              "no traveller policy '" + name + "' for model " + ToString(m));
}

std::unique_ptr<BlockerPolicy> MakeBlocker(const std::string& name, const Instance& inst,
                                           const GameRules& rules, std::uint64_t seed,
                                           const SearchLimits& limits) {
  const GameModel m = rules.model;
  if (name == "none") return MakeNoBlocker();
  if (name == "random") return MakeRandomBlocker(seed);
  if (name == "exact" || name == "strategy") {
    switch (m) {
      case GameModel::kLi:
        return MakeExactLiBlocker(inst, rules.t1, rules.deadline, limits);
      case GameModel::kU:
        return MakeUBlocker(inst, rules.t1, rules.deadline);
      case GameModel::kDag:
        return MakeDagBlocker(inst);
      case GameModel::kStatic:
        return MakeExactStaticBlocker(inst, StaticOptions{std::nullopt, limits});
    }
  }
  throw Error(ErrorCode::kInvalidArgument,
              "no blocker policy '" + name + "' for model " + ToString(m));
}

}  // namespace tctp
