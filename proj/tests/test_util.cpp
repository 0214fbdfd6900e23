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

#include "test_util.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace tctp::testing {

Instance TwoWay(int k) {
  const int thick = std::max(k, 1);
  return MakeTemporal({"s", "v0", "v1", "v2", "t"},
                      {{"s", "v0", 0, 1, k + 1},
                       {"v0", "v1", 1, 1, k + 1},
                       {"v0", "v2", 2, 1, 1},
                       {"v1", "t", 2, 1, thick},
                       {"v2", "t", 3, 1, k + 1}},
                      k);
}

Instance ForcedChain(int k) {
  return MakeTemporal({"s", "a", "t"}, {{"s", "a", 0, 1, k + 1}, {"a", "t", 1, 1, k + 1}}, k);
}

Instance MakeDag(const std::vector<std::string>& names, const std::vector<ArcDesc>& arcs,
                 int k, const std::string& s, const std::string& t) {
  VertexNames vn(names);
  std::vector<StaticEdge> edges;
  for (const ArcDesc& a : arcs) {
    edges.push_back(StaticEdge{vn.at(a.u), vn.at(a.v), a.weight, a.copies});
  }
  return MakeStaticInstance(StaticGraph(vn, edges, true), s, t, k);
}

Instance MakeTemporal(const std::vector<std::string>& names,
                      const std::vector<TimeDesc>& edges, int k, const std::string& s,
                      const std::string& t) {
  VertexNames vn(names);
  std::vector<TimeEdge> out;
  for (const TimeDesc& e : edges) {
    out.push_back(TimeEdge{vn.at(e.u), vn.at(e.v), e.tau, e.d, e.copies});
  }
  return MakeTemporalInstance(TemporalGraph(vn, out), s, t, k);
}

std::vector<TemporalWalk> EnumerateWalks(const TemporalGraph& g, VertexId start, Time t1,
                                         std::size_t max_steps, EdgeId removed) {
  std::vector<TemporalWalk> out;
  TemporalWalk walk;
  walk.start = start;
  std::function<void(VertexId, Time)> extend = [&](VertexId at, Time ready) {
    out.push_back(walk);
    if (walk.steps.size() == max_steps) return;
    for (EdgeId e = 0; e < static_cast<EdgeId>(g.num_edges()); ++e) {
      const TimeEdge& te = g.edge(e);
      if (e == removed && te.copies == 1) continue;
      if (!te.touches(at) || te.tau < ready) continue;
      walk.steps.push_back(WalkStep{at, te.other(at), te.tau, te.d});
      extend(te.other(at), te.tau + te.d);
      walk.steps.pop_back();
    }
  };
  extend(start, t1);
  return out;
}

Time BruteLatestDeparture(const TemporalGraph& g, VertexId v, VertexId t, Time deadline,
                          EdgeId removed) {
  if (v == t) return deadline;
  Time best = kNever;
  for (const TemporalWalk& w : EnumerateWalks(g, v, 0, 8, removed)) {
    if (w.steps.empty() || w.end() != t || w.steps.back().arrival() > deadline) continue;
    best = std::max(best, w.steps.front().tau);
  }
  return best;
}

bool BruteReachable(const TemporalGraph& g, VertexId s, VertexId t, Time t1, Time t2) {
  if (s == t) return t1 <= t2;
  for (const TemporalWalk& w : EnumerateWalks(g, s, t1)) {
    if (!w.steps.empty() && w.end() == t && w.steps.back().arrival() <= t2) return true;
  }
  return false;
}

Cost BellmanFord(const StaticGraph& g, VertexId s, VertexId t) {
  std::vector<Cost> dist(g.num_vertices(), kUnreachable);
  dist[s] = 0;
  for (std::size_t round = 0; round < g.num_vertices(); ++round) {
    for (VertexId u = 0; u < static_cast<VertexId>(g.num_vertices()); ++u) {
      if (dist[u] == kUnreachable) continue;
      for (EdgeId e : g.out_edges(u)) {
        const VertexId v = g.head(e, u);
        dist[v] = std::min(dist[v], dist[u] + g.edge(e).weight);
      }
    }
  }
  return dist[t];
}

bool Recount(const CnfFormula& f, const std::vector<bool>& assignment) {
  int satisfied = 0;
  for (const Clause& c : f.clauses) {
    int true_literals = 0;
    for (int lit : c) {
      const bool value = assignment[(lit > 0 ? lit : -lit) - 1];
      true_literals += (lit > 0) == value ? 1 : 0;
    }
    satisfied += true_literals > 0 ? 1 : 0;
  }
  return satisfied == f.m();
}

namespace {

using Formula = std::vector<Clause>;

Clause SortedClause(Clause c) {
  std::sort(c.begin(), c.end());
  return c;
}

Formula Canonical(Formula f) {
  for (Clause& c : f) c = SortedClause(c);
  std::sort(f.begin(), f.end());
  return f;
}

// All multisets of `size` items drawn from `pool` (sorted index sequences).
template <typename T>
std::vector<std::vector<T>> Multisets(const std::vector<T>& pool, int size) {
  std::vector<std::vector<T>> out;
  std::vector<T> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (static_cast<int>(cur.size()) == size) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = from; i < pool.size(); ++i) {
      cur.push_back(pool[i]);
      rec(i);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<Formula> AllFormulas(int n, int max_m) {
  std::vector<int> literals;
  for (int v = 1; v <= n; ++v) {
    literals.push_back(v);
    literals.push_back(-v);
  }
  std::vector<Clause> clauses;
  for (const auto& ms : Multisets(literals, 3)) {
    clauses.push_back(SortedClause(Clause{ms[0], ms[1], ms[2]}));
  }
  std::vector<Formula> out;
  for (int m = 0; m <= max_m; ++m) {
    for (const auto& ms : Multisets(clauses, m)) out.push_back(ms);
  }
  return out;
}

// Applies a variable permutation and polarity mask.
Formula Transform(const Formula& f, const std::vector<int>& perm, int flips) {
  Formula g = f;
  for (Clause& c : g) {
    for (int& lit : c) {
      const int v = lit > 0 ? lit : -lit;
      int w = perm[v - 1] + 1;
      const bool negate = ((flips >> (v - 1)) & 1) != 0;
      lit = (lit > 0) != negate ? w : -w;
    }
  }
  return Canonical(g);
}

std::vector<Formula> Orbits(int n, int max_m, bool permute) {
  std::set<Formula> seen;
  std::vector<Formula> out;
  std::vector<std::vector<int>> perms;
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  do {
    perms.push_back(perm);
  } while (permute && std::next_permutation(perm.begin(), perm.end()));
  for (const Formula& f : AllFormulas(n, max_m)) {
    const Formula c = Canonical(f);
    if (seen.count(c) != 0) continue;
    out.push_back(c);
    for (const auto& p : perms) {
      for (int flips = 0; flips < (1 << n); ++flips) seen.insert(Transform(c, p, flips));
    }
  }
  return out;
}

}  // namespace

std::vector<CnfFormula> CnfCorpus() {
  std::vector<CnfFormula> out;
  for (int n = 1; n <= 2; ++n) {
    for (const Formula& f : Orbits(n, 2, true)) out.push_back(CnfFormula{n, f});
  }
  return out;
}

std::vector<QbfFormula> QbfCorpus() {
  std::vector<QbfFormula> out;
  for (const Formula& f : Orbits(2, 2, false)) {
    out.push_back(QbfFormula{CnfFormula{2, f}, {false, true}});
  }
  return out;
}

}  // namespace tctp::testing
