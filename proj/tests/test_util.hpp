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

// Fixtures and brute-force oracles shared by the test binaries. Nothing here
// calls the solvers under test.

#ifndef TCTP_TESTS_TEST_UTIL_HPP_
#define TCTP_TESTS_TEST_UTIL_HPP_

#include <string>
#include <vector>

#include "tctp/core.hpp"
#include "tctp/gadgets.hpp"

namespace tctp::testing {

// s, v0, v1, v2, t; thick edges carry max(k, 1) copies and double edges k+1.
Instance TwoWay(int k = 2);

// s -(0,1)- a -(1,1)- t with k+1 copies on both edges.
Instance ForcedChain(int k);

struct ArcDesc {
  std::string u;
  std::string v;
  Cost weight;
  int copies = 1;
};
Instance MakeDag(const std::vector<std::string>& names, const std::vector<ArcDesc>& arcs,
                 int k, const std::string& s = "s", const std::string& t = "t");

struct TimeDesc {
  std::string u;
  std::string v;
  Time tau;
  Time d = 1;
  int copies = 1;
};
Instance MakeTemporal(const std::vector<std::string>& names,
                      const std::vector<TimeDesc>& edges, int k,
                      const std::string& s = "s", const std::string& t = "t");

// Every walk from `start` whose first departure is >= t1, up to max_steps
// steps, including the empty walk. Edge `removed` (if >= 0) is skipped when
// it has a single copy.
std::vector<TemporalWalk> EnumerateWalks(const TemporalGraph& g, VertexId start, Time t1,
                                         std::size_t max_steps = 8, EdgeId removed = -1);

// Latest first departure of a walk from v reaching t by deadline, by
// enumeration; deadline itself when v == t; kNever when none.
Time BruteLatestDeparture(const TemporalGraph& g, VertexId v, VertexId t, Time deadline,
                          EdgeId removed = -1);

// Plain temporal reachability: some walk from s departing >= t1 reaches t by t2.
bool BruteReachable(const TemporalGraph& g, VertexId s, VertexId t, Time t1, Time t2);

// Static shortest path by Bellman-Ford relaxation over out-edges.
Cost BellmanFord(const StaticGraph& g, VertexId s, VertexId t);

// Clause-by-clause recount, independent of Satisfies().
bool Recount(const CnfFormula& f, const std::vector<bool>& assignment);

// Every 3-CNF with n in {1, 2} and m <= 2, one per orbit under variable
// renaming and polarity flips.
std::vector<CnfFormula> CnfCorpus();
// Every exists x1 forall x2 formula with m <= 2, one per orbit under
// polarity flips.
std::vector<QbfFormula> QbfCorpus();

}  // namespace tctp::testing

#endif  // TCTP_TESTS_TEST_UTIL_HPP_
