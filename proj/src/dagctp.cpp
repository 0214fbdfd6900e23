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

#include "tctp/dagctp.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

namespace tctp {
namespace {

struct Candidate {
  Cost value;
  ArcId arc;
  int copies;
};

// Out-arc candidates at u for budget index b, cheapest first.
std::vector<Candidate> SortedCandidates(const BlockDag& dag, const PiTable& pi,
                                        NodeId u, int b) {
  std::vector<Candidate> c;
  for (ArcId a : dag.out(u)) {
    const Arc& arc = dag.arc(a);
    c.push_back(Candidate{AddCost(pi.at(arc.head, b), arc.weight), a, dag.copies(a)});
  }
  std::sort(c.begin(), c.end(), [](const Candidate& x, const Candidate& y) {
    return x.value != y.value ? x.value < y.value : x.arc < y.arc;
  });
  return c;
}

// The first `limit` entries of the per-copy multiset.
std::vector<Cost> Smallest(const std::vector<Candidate>& sorted, int limit) {
  std::vector<Cost> out;
  for (const Candidate& c : sorted) {
    for (int j = 0; j < c.copies && static_cast<int>(out.size()) < limit; ++j) {
      out.push_back(c.value);
    }
    if (static_cast<int>(out.size()) >= limit) break;
  }
  return out;
}

Cost NthSmallest(const std::vector<Cost>& smallest, int m) {
  return m < static_cast<int>(smallest.size()) ? smallest[m] : kUnreachable;
}

}  // namespace

PiTable ComputePi(const BlockDag& dag, NodeId target, int k) {
  auto order = dag.TopologicalOrder();
  if (!order) throw Error(ErrorCode::kCycle, "graph has a cycle");
  return ComputePi(dag, target, k, *order);
}

PiTable ComputePi(const BlockDag& dag, NodeId target, int k,
                  std::span<const NodeId> topo_order) {
  if (k < 0) throw Error(ErrorCode::kInvalidArgument, "k must be >= 0");
  if (target < 0 || target >= dag.num_nodes()) {
    throw Error(ErrorCode::kUnknownVertex, "unknown target vertex");
  }
  std::vector<int> position(dag.num_nodes(), -1);
  if (static_cast<int>(topo_order.size()) != dag.num_nodes()) {
    throw Error(ErrorCode::kInvalidArgument, "order does not cover every node");
  }
  for (std::size_t i = 0; i < topo_order.size(); ++i) {
    const NodeId v = topo_order[i];
    if (v < 0 || v >= dag.num_nodes() || position[v] != -1) {
      throw Error(ErrorCode::kInvalidArgument, "order is not a permutation");
    }
    position[v] = static_cast<int>(i);
  }
  for (const Arc& a : dag.arcs()) {
    if (position[a.tail] >= position[a.head]) {
      throw Error(ErrorCode::kInvalidArgument, "order is not topological");
    }
  }

  PiTable pi(dag.num_nodes(), k);
  std::vector<std::vector<Cost>> smallest(k + 1);
  for (auto it = topo_order.rbegin(); it != topo_order.rend(); ++it) {
    const NodeId v = *it;
    if (v == target) {
      for (int i = 0; i <= k; ++i) pi.set(v, i, 0);
      continue;
    }
    for (int b = 0; b <= k; ++b) {
      smallest[b] = Smallest(SortedCandidates(dag, pi, v, b), k + 1);
    }
    for (int i = 0; i <= k; ++i) {
      Cost best = 0;
      for (int m = 0; m <= i; ++m) best = std::max(best, NthSmallest(smallest[i - m], m));
      pi.set(v, i, best);
    }
  }
  return pi;
}

ArcId TravellerMove(const BlockDag& dag, const PiTable& pi, NodeId u,
                    int spent_before, std::span<const ArcBlock> newly_blocked) {
  std::vector<int> blocked(dag.num_arcs(), 0);
  int spent = spent_before;
  for (const ArcBlock& b : newly_blocked) {
    if (b.arc < 0 || b.arc >= dag.num_arcs() || dag.arc(b.arc).tail != u) {
      throw Error(ErrorCode::kInvalidArgument, "blocked arc does not leave u");
    }
    blocked[b.arc] += b.copies;
    spent += b.copies;
  }
  const int budget = pi.k() - spent;
  if (budget < 0) throw Error(ErrorCode::kInvalidArgument, "Blocker exceeded k");
  ArcId best = -1;
  Cost best_value = kUnreachable;
  for (ArcId a : dag.out(u)) {
    if (blocked[a] >= dag.copies(a)) continue;
    const Cost value = AddCost(pi.at(dag.arc(a).head, budget), dag.arc(a).weight);
    if (value < best_value) {
      best_value = value;
      best = a;
    }
  }
  if (best < 0) throw Error(ErrorCode::kNoSafeMove, "no safe move");
  return best;
}

std::vector<ArcBlock> BlockerMove(const BlockDag& dag, const PiTable& pi,
                                  NodeId u, int budget) {
  if (budget < 0 || budget > pi.k()) {
    throw Error(ErrorCode::kInvalidArgument, "budget out of range");
  }
  int best_m = 0;
  Cost best_value = -1;
  for (int m = 0; m <= budget; ++m) {
    const Cost value =
        NthSmallest(Smallest(SortedCandidates(dag, pi, u, budget - m), m + 1), m);
    if (value > best_value) {
      best_value = value;
      best_m = m;
    }
  }
  std::vector<ArcBlock> blocks;
  int left = best_m;
  for (const Candidate& c : SortedCandidates(dag, pi, u, budget - best_m)) {
    if (left == 0) break;
    const int take = std::min(left, c.copies);
    blocks.push_back(ArcBlock{c.arc, take});
    left -= take;
  }
  return blocks;
}

namespace {

class BruteDag {
 public:
  BruteDag(const BlockDag& dag, NodeId target, const SearchLimits& limits)
      : dag_(dag), target_(target), limits_(limits) {}

  // Value on arrival at pos, before Blocker reveals pos's out-arcs.
  Cost Arrive(NodeId pos, int budget, std::vector<int>& decided) {
    if (pos == target_) return 0;
    std::string key = Key(pos, budget, decided);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (!limits_.override && memo_.size() >= limits_.max_states) {
      throw Error(ErrorCode::kSizeLimit, "DAG game state limit exceeded");
    }
    std::vector<int> open;
    for (ArcId a : dag_.out(pos)) {
      if (decided[dag_.arc(a).group] < 0) open.push_back(dag_.arc(a).group);
    }
    Cost worst = -1;
    Enumerate(pos, budget, decided, open, 0, worst);
    memo_.emplace(std::move(key), worst);
    return worst;
  }

 private:
  // Blocker assigns a blocked count to each group in open[i..]; keeps the
  // maximum over assignments of Traveller's best reply.
  void Enumerate(NodeId pos, int budget, std::vector<int>& decided,
                 const std::vector<int>& open, std::size_t i, Cost& worst) {
    if (worst == kUnreachable) return;
    if (i == open.size()) {
      worst = std::max(worst, Travel(pos, budget, decided));
      return;
    }
    const int g = open[i];
    for (int c = 0; c <= std::min(budget, dag_.group_copies(g)); ++c) {
      decided[g] = c;
      Enumerate(pos, budget - c, decided, open, i + 1, worst);
    }
    decided[g] = -1;
  }

  Cost Travel(NodeId pos, int budget, std::vector<int>& decided) {
    Cost best = kUnreachable;
    for (ArcId a : dag_.out(pos)) {
      const Arc& arc = dag_.arc(a);
      if (decided[arc.group] >= dag_.group_copies(arc.group)) continue;
      best = std::min(best, AddCost(Arrive(arc.head, budget, decided), arc.weight));
    }
    return best;
  }

  static std::string Key(NodeId pos, int budget, const std::vector<int>& decided) {
    std::string key;
    key.reserve(8 + decided.size());
    key.append(reinterpret_cast<const char*>(&pos), sizeof(pos));
    key.push_back(static_cast<char>(budget));
    for (int d : decided) key.push_back(static_cast<char>(d));
    return key;
  }

  const BlockDag& dag_;
  NodeId target_;
  SearchLimits limits_;
  std::unordered_map<std::string, Cost> memo_;
};

}  // namespace

Cost BruteDagGame(const BlockDag& dag, NodeId s, NodeId target, int k,
                  const SearchLimits& limits) {
  if (k < 0) throw Error(ErrorCode::kInvalidArgument, "k must be >= 0");
  if (!dag.TopologicalOrder()) throw Error(ErrorCode::kCycle, "graph has a cycle");
  std::vector<int> decided(dag.num_groups(), -1);
  return BruteDag(dag, target, limits).Arrive(s, k, decided);
}

}  // namespace tctp
