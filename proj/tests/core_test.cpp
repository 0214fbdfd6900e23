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

#include <random>
#include <set>

#include "tctp/core.hpp"
#include "tctp/instance_io.hpp"
#include "tctp/random_instances.hpp"
#include "test_util.hpp"

namespace tctp {
namespace {

using testing::TwoWay;

TEST(ValidateWalkTest, EmptyWalkIsValid) {
  const Instance inst = TwoWay();
  EXPECT_TRUE(ValidateWalk(inst.temporal(), TemporalWalk{inst.source, {}}));
}

TEST(ValidateWalkTest, TwoWayTwoStepWalk) {
  const Instance inst = TwoWay();
  const VertexNames& n = inst.names();
  TemporalWalk w{n.at("s"), {{n.at("s"), n.at("v0"), 0, 1}, {n.at("v0"), n.at("v1"), 1, 1}}};
  EXPECT_TRUE(ValidateWalk(inst.temporal(), w));
}

TEST(ValidateWalkTest, RejectsGoingBackInTime) {
  const Instance inst = TwoWay();
  const VertexNames& n = inst.names();
  TemporalWalk w{n.at("v0"), {{n.at("v0"), n.at("v2"), 2, 1}, {n.at("v0"), n.at("v1"), 1, 1}}};
  const WalkCheck c = ValidateWalk(inst.temporal(), w);
  EXPECT_FALSE(c);
  ASSERT_TRUE(c.first_violation.has_value());
  EXPECT_EQ(*c.first_violation, 1u);
}

TEST(ValidateWalkTest, RejectsMissingEdge) {
  const Instance inst = TwoWay();
  const VertexNames& n = inst.names();
  TemporalWalk w{n.at("s"), {{n.at("s"), n.at("v0"), 1, 1}}};
  const WalkCheck c = ValidateWalk(inst.temporal(), w);
  EXPECT_FALSE(c);
  EXPECT_EQ(*c.first_violation, 0u);
}

TEST(LifespanTest, Examples) {
  EXPECT_EQ(Lifespan(TwoWay().temporal()), 3);
  EXPECT_EQ(Lifespan(TemporalGraph(VertexNames({"a"}), {})), 0);
  EXPECT_EQ(Lifespan(TemporalGraph(VertexNames({"a", "b"}), {TimeEdge{0, 1, 7, 2, 1}})), 7);
}

TEST(CanonicalizeTest, MergesAndOrientsEdges) {
  const auto edges = Canonicalize({TimeEdge{1, 0, 3, 1, 2}, TimeEdge{0, 1, 3, 1, 3}});
  ASSERT_EQ(edges.size(), 1u);
  EXPECT_EQ(edges[0], (TimeEdge{0, 1, 3, 1, 5}));
}

TEST(CanonicalizeTest, Idempotent) {
  Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    const Instance inst = RandomTemporal(rng);
    const auto& edges = inst.temporal().edges();
    EXPECT_EQ(Canonicalize(edges), edges);
  }
}

TEST(CanonicalizeTest, RejectsBadEdges) {
  EXPECT_THROW(Canonicalize({TimeEdge{0, 0, 1, 1, 1}}), Error);
  EXPECT_THROW(Canonicalize({TimeEdge{0, 1, 1, 0, 1}}), Error);
  EXPECT_THROW(Canonicalize({TimeEdge{0, 1, 1, 1, 0}}), Error);
}

constexpr char kTwoWayText[] = R"(model temporal
vertices s v0 v1 v2 t
source s
target t
k 2
edge s v0 0 1 3
edge v0 v1 1 1 3
edge v0 v2 2 1 1
edge v1 t 2 1 2
edge v2 t 3 1 3
)";

TEST(InstanceIoTest, ParsesTwoWay) {
  const Instance inst = ParseInstance(kTwoWayText);
  EXPECT_EQ(inst.num_vertices(), 5u);
  EXPECT_EQ(inst.temporal().num_edges(), 5u);
  EXPECT_EQ(inst, TwoWay());
}

TEST(InstanceIoTest, UnknownSource) {
  try {
    ParseInstance("model temporal\nvertices a t\nsource s\ntarget t\nk 0\n");
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("unknown source vertex"), std::string::npos);
  }
}

TEST(InstanceIoTest, DuplicateKeysMerge) {
  const Instance inst = ParseInstance(
      "model temporal\nvertices s t\nsource s\ntarget t\nk 1\n"
      "edge s t 0 1 2\nedge t s 0 1 3\n");
  ASSERT_EQ(inst.temporal().num_edges(), 1u);
  EXPECT_EQ(inst.temporal().edge(0).copies, 5);
}

TEST(InstanceIoTest, ErrorsCarryLineNumbers) {
  try {
    ParseInstance("model temporal\nvertices s t\nsource s\nbogus 1\n");
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse);
    EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos);
  }
  EXPECT_THROW(ParseInstance("model temporal\nvertices s t\nsource s\ntarget t\nk 0\n"
                             "edge s t 0 0 1\n"),
               Error);
  EXPECT_THROW(ParseInstance("model nope\n"), Error);
}

TEST(InstanceIoTest, CommentsAndDeadline) {
  const Instance inst = ParseInstance(
      "# hello\nmodel static\nvertices s t\nsource s\ntarget t\nk 1\ndeadline 9\n"
      "edge s t 4 2  # two copies\n");
  EXPECT_EQ(inst.model, Model::kStatic);
  EXPECT_EQ(inst.deadline, 9);
  EXPECT_EQ(inst.static_graph().edge(0).weight, 4);
}

TEST(InstanceIoTest, RoundTripIsByteStable) {
  Rng rng(3);
  for (int i = 0; i < 60; ++i) {
    Instance inst = i % 3 == 0   ? RandomTemporal(rng)
                    : i % 3 == 1 ? RandomStatic(rng)
                                 : RandomDag(rng);
    if (i % 2 == 0) inst.deadline = i;
    const std::string text = SerializeInstance(inst);
    const Instance back = ParseInstance(text);
    EXPECT_EQ(back, inst);
    EXPECT_EQ(SerializeInstance(back), text);
    EXPECT_EQ(ParseInstance(SerializeInstanceJson(inst)), inst);
  }
}

TEST(InstanceIoTest, JsonDefaultsCopies) {
  const Instance inst = ParseInstance(
      R"({"model":"dag","vertices":["s","t"],"source":"s","target":"t","k":0,)"
      R"("deadline":null,"edges":[{"u":"s","v":"t","weight":3}]})");
  EXPECT_EQ(inst.model, Model::kDag);
  EXPECT_EQ(inst.static_graph().edge(0).copies, 1);
  EXPECT_FALSE(inst.deadline.has_value());
}

// Walks built from random steps are valid exactly when the enumerator lists them.
TEST(ValidateWalkTest, MatchesWalkEnumerator) {
  Rng rng(5);
  RandomTemporalOptions options;
  options.max_vertices = 4;
  options.lifespan = 4;
  options.max_edges = 6;
  for (int i = 0; i < 40; ++i) {
    const Instance inst = RandomTemporal(rng, options);
    const TemporalGraph& g = inst.temporal();
    const auto walks = testing::EnumerateWalks(g, inst.source, 0);
    std::set<std::vector<std::tuple<VertexId, VertexId, Time, Time>>> listed;
    for (const TemporalWalk& w : walks) {
      EXPECT_TRUE(ValidateWalk(g, w));
      std::vector<std::tuple<VertexId, VertexId, Time, Time>> key;
      for (const WalkStep& s : w.steps) key.emplace_back(s.from, s.to, s.tau, s.d);
      listed.insert(key);
    }
    for (int trial = 0; trial < 30; ++trial) {
      TemporalWalk w{inst.source, {}};
      VertexId at = inst.source;
      const int len = std::uniform_int_distribution<int>(1, 3)(rng);
      for (int j = 0; j < len; ++j) {
        const TimeEdge& e = g.edge(std::uniform_int_distribution<EdgeId>(
            0, static_cast<EdgeId>(g.num_edges()) - 1)(rng));
        const VertexId from = e.touches(at) ? at : e.u;
        w.steps.push_back(WalkStep{from, e.other(from), e.tau, e.d});
        at = e.other(from);
      }
      std::vector<std::tuple<VertexId, VertexId, Time, Time>> key;
      for (const WalkStep& s : w.steps) key.emplace_back(s.from, s.to, s.tau, s.d);
      EXPECT_EQ(static_cast<bool>(ValidateWalk(g, w)), listed.count(key) == 1);
    }
  }
}

TEST(StaticGraphTest, DirectedKeepsOrientation) {
  StaticGraph g(VertexNames({"a", "b"}), {StaticEdge{0, 1, 2, 1}, StaticEdge{1, 0, 2, 1}}, true);
  EXPECT_EQ(g.num_edges(), 2u);
  EXPECT_EQ(g.out_edges(0).size(), 1u);
  StaticGraph u(VertexNames({"a", "b"}), {StaticEdge{0, 1, 2, 1}, StaticEdge{1, 0, 2, 1}}, false);
  EXPECT_EQ(u.num_edges(), 1u);
  EXPECT_EQ(u.edge(0).copies, 2);
}

TEST(ErrorTest, CodeNames) {
  EXPECT_STREQ(ToString(ErrorCode::kSizeLimit), "SIZE_LIMIT");
  EXPECT_STREQ(ToString(ErrorCode::kParse), "PARSE_ERROR");
}

}  // namespace
}  // namespace tctp
