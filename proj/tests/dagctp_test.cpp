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

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <queue>

#include "tctp/arena.hpp"
#include "tctp/dagctp.hpp"
#include "tctp/expansion.hpp"
#include "tctp/policies.hpp"
#include "tctp/random_instances.hpp"
#include "tctp/staticctp.hpp"
#include "test_util.hpp"

namespace tctp {
namespace {

using testing::MakeDag;

// v with three single-copy arcs to t of weights 1, 2 and 5; s -> v costs 0.
Instance ThreeArcs(int k) {
  return MakeDag({"s", "v", "t"}, {{"s", "v", 0, k + 1}, {"v", "t", 1}, {"v", "t", 2}, {"v", "t", 5}},
                 k);
}

BlockDag DagOf(const Instance& inst) { return BlockDag::FromStaticGraph(inst.static_graph()); }

TEST(ComputePiTest, ThreeArcsOrderStatistics) {
  const Instance inst = ThreeArcs(3);
  const PiTable pi = ComputePi(DagOf(inst), inst.target, 3);
  const NodeId v = inst.names().at("v");
  EXPECT_EQ(pi.at(v, 0), 1);
  EXPECT_EQ(pi.at(v, 1), 2);
  EXPECT_EQ(pi.at(v, 2), 5);
  EXPECT_EQ(pi.at(v, 3), kUnreachable);
  for (int i = 0; i <= 3; ++i) EXPECT_EQ(pi.at(inst.target, i), 0);
}

TEST(ComputePiTest, CopiesCountAsCandidates) {
  const Instance inst = MakeDag({"s", "t"}, {{"s", "t", 4, 2}, {"s", "t", 9, 1}}, 2);
  const PiTable pi = ComputePi(DagOf(inst), inst.target, 2);
  EXPECT_EQ(pi.at(inst.source, 0), 4);
  EXPECT_EQ(pi.at(inst.source, 1), 4);
  EXPECT_EQ(pi.at(inst.source, 2), 9);
}

TEST(ComputePiTest, RejectsCycle) {
  const Instance inst = MakeDag({"s", "a", "t"}, {{"s", "a", 1}, {"a", "s", 1}, {"a", "t", 1}}, 0);
  try {
    ComputePi(DagOf(inst), inst.target, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCycle);
  }
}

TEST(DecideDagTest, ThreeArcs) {
  const Instance inst = ThreeArcs(2);
  const PiTable pi = ComputePi(DagOf(inst), inst.target, 2);
  EXPECT_TRUE(DecideDag(pi, inst.source, 5));
  EXPECT_FALSE(DecideDag(pi, inst.source, 4));
}

TEST(DecideDagTest, SourceIsTarget) {
  const Instance inst = MakeDag({"s"}, {}, 2, "s", "s");
  const PiTable pi = ComputePi(DagOf(inst), inst.target, 2);
  EXPECT_TRUE(DecideDag(pi, inst.source, 0));
}

TEST(DecideDagTest, TwoWayExpansionLoses) {
  const Instance inst = testing::TwoWay(2);
  const ExpandedDag x = BuildExpansion(inst, 0, 3);
  const PiTable pi = ComputePi(x.dag, x.target, 2);
  EXPECT_FALSE(DecideDag(pi, x.source, 3));
}

TEST(TravellerMoveTest, AvoidsBlockedCheapArc) {
  const Instance inst = ThreeArcs(2);
  const BlockDag dag = DagOf(inst);
  const PiTable pi = ComputePi(dag, inst.target, 2);
  const NodeId v = inst.names().at("v");
  const ArcId cheap = dag.out(v)[0];
  ASSERT_EQ(dag.arc(cheap).weight, 1);
  const ArcBlock blocked[] = {{cheap, 1}};
  const ArcId chosen = TravellerMove(dag, pi, v, 0, blocked);
  EXPECT_EQ(dag.arc(chosen).weight, 2);
}

TEST(TravellerMoveTest, SingleArc) {
  const Instance inst = MakeDag({"s", "t"}, {{"s", "t", 3}}, 0);
  const BlockDag dag = DagOf(inst);
  const PiTable pi = ComputePi(dag, inst.target, 0);
  EXPECT_EQ(TravellerMove(dag, pi, inst.source, 0, {}), 0);
}

TEST(TravellerMoveTest, NoSafeMove) {
  const Instance inst = MakeDag({"s", "t"}, {{"s", "t", 3}}, 1);
  const BlockDag dag = DagOf(inst);
  const PiTable pi = ComputePi(dag, inst.target, 1);
  const ArcBlock blocked[] = {{0, 1}};
  try {
    TravellerMove(dag, pi, inst.source, 0, blocked);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNoSafeMove);
  }
}

TEST(BlockerMoveTest, ThreeArcs) {
  const Instance inst = ThreeArcs(2);
  const BlockDag dag = DagOf(inst);
  const PiTable pi = ComputePi(dag, inst.target, 2);
  const NodeId v = inst.names().at("v");
  const auto blocks = BlockerMove(dag, pi, v, 2);
  ASSERT_EQ(blocks.size(), 2u);
  EXPECT_EQ(dag.arc(blocks[0].arc).weight, 1);
  EXPECT_EQ(dag.arc(blocks[1].arc).weight, 2);
  EXPECT_TRUE(BlockerMove(dag, pi, v, 0).empty());
}

TEST(BruteDagGameTest, Examples) {
  const Instance three = ThreeArcs(2);
  EXPECT_EQ(BruteDagGame(DagOf(three), three.source, three.target, 2), 5);
  const Instance path = MakeDag({"s", "a", "t"}, {{"s", "a", 1}, {"a", "t", 1}}, 1);
  EXPECT_EQ(BruteDagGame(DagOf(path), path.source, path.target, 1), kUnreachable);
  EXPECT_EQ(BruteDagGame(DagOf(path), path.source, path.target, 0), 2);
}

TEST(BruteDagGameTest, SizeLimit) {
  Rng rng(1);
  const Instance inst = LayeredDag(rng, 4, 3, 3);
  SearchLimits limits;
  limits.max_states = 1;
  EXPECT_THROW(BruteDagGame(DagOf(inst), inst.source, inst.target, 3, limits), Error);
}

// Kahn's algorithm preferring the largest ready node.
std::vector<NodeId> ReverseKahn(const BlockDag& dag) {
  std::vector<int> indeg(dag.num_nodes(), 0);
  for (const Arc& a : dag.arcs()) ++indeg[a.head];
  std::priority_queue<NodeId> ready;
  for (NodeId v = 0; v < dag.num_nodes(); ++v) {
    if (indeg[v] == 0) ready.push(v);
  }
  std::vector<NodeId> order;
  while (!ready.empty()) {
    const NodeId v = ready.top();
    ready.pop();
    order.push_back(v);
    for (ArcId a : dag.out(v)) {
      if (--indeg[dag.arc(a).head] == 0) ready.push(dag.arc(a).head);
    }
  }
  return order;
}

class RandomDagTest : public ::testing::TestWithParam<int> {};

TEST_P(RandomDagTest, Properties) {
  Rng rng(GetParam());
  for (int i = 0; i < 40; ++i) {
    const Instance inst = RandomDag(rng);
    const BlockDag dag = DagOf(inst);
    const int k = inst.k;
    const PiTable pi = ComputePi(dag, inst.target, k);
    EXPECT_EQ(pi.at(inst.source, k), BruteDagGame(dag, inst.source, inst.target, k));
    EXPECT_EQ(pi.at(inst.source, 0), testing::BellmanFord(inst.static_graph(), inst.source,
                                                          inst.target));
    for (NodeId v = 0; v < dag.num_nodes(); ++v) {
      for (int j = 0; j < k; ++j) EXPECT_LE(pi.at(v, j), pi.at(v, j + 1));
    }
    EXPECT_EQ(ComputePi(dag, inst.target, k, ReverseKahn(dag)), pi);
    StaticOptions tail;
    tail.discovery = Discovery::kTail;
    EXPECT_EQ(ExactStaticValue(inst, tail), pi.at(inst.source, k));
  }
}

// The pi strategy never pays more than pi_k(s) against any Blocker.
TEST_P(RandomDagTest, TravellerStrategyIsSound) {
  Rng rng(GetParam() + 50);
  for (int i = 0; i < 25; ++i) {
    const Instance inst = RandomDag(rng);
    const PiTable pi = ComputePi(DagOf(inst), inst.target, inst.k);
    const Cost value = pi.at(inst.source, inst.k);
    if (value == kUnreachable) continue;
    GameRules rules = DefaultRules(inst);
    rules.deadline = value;
    auto traveller = MakeDagTraveller(inst);
    EXPECT_TRUE(VerifyTravellerStrategy(inst, *traveller, rules).ok);
  }
}

// Against the pi Blocker, the best Traveller still pays at least pi_k(s).
TEST_P(RandomDagTest, BlockerStrategyIsSound) {
  Rng rng(GetParam() + 90);
  for (int i = 0; i < 25; ++i) {
    const Instance inst = RandomDag(rng);
    const PiTable pi = ComputePi(DagOf(inst), inst.target, inst.k);
    auto blocker = MakeDagBlocker(inst);
    std::function<Cost(Game)> best = [&](Game g) -> Cost {
      while (!g.over() && !g.Offered().empty()) {
        const auto offered = g.Offered();
        g.ApplyReveal(blocker->Reveal(g.view(), offered));
      }
      if (g.over()) {
        return g.transcript().outcome == Outcome::kTravellerWin ? g.state().clock
                                                                : kUnreachable;
      }
      Cost result = kUnreachable;
      const StaticGraph& sg = inst.static_graph();
      for (EdgeId e : sg.out_edges(g.state().pos)) {
        if (!g.state().open(e, sg.edge(e).copies)) continue;
        Game next = g;
        next.ApplyAction(Action::Move(e));
        result = std::min(result, best(next));
      }
      return result;
    };
    EXPECT_GE(best(Game(inst, DefaultRules(inst))), pi.at(inst.source, inst.k));
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomDagTest, ::testing::Values(1, 2, 3));

}  // namespace
}  // namespace tctp
