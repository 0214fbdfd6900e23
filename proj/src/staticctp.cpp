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

#include "tctp/staticctp.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>
#include <unordered_map>
#include <utility>

namespace tctp {
namespace {

enum Status : std::uint8_t { kUndecided = 0, kOpen = 1, kBlocked = 2 };

// Distances to t over all edges, following arcs backwards when directed.
std::vector<Cost> DistancesTo(const StaticGraph& g, VertexId t) {
  std::vector<std::vector<std::pair<VertexId, Cost>>> reverse(g.num_vertices());
  for (const StaticEdge& e : g.edges()) {
    reverse[e.v].emplace_back(e.u, e.weight);
    if (!g.directed()) reverse[e.u].emplace_back(e.v, e.weight);
  }
  std::vector<Cost> dist(g.num_vertices(), kUnreachable);
  using Item = std::pair<Cost, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[t] = 0;
  queue.emplace(0, t);
  while (!queue.empty()) {
    auto [d, v] = queue.top();
    queue.pop();
    if (d > dist[v]) continue;
    for (auto [u, w] : reverse[v]) {
      if (d + w < dist[u]) {
        dist[u] = d + w;
        queue.emplace(dist[u], u);
      }
    }
  }
  return dist;
}

struct MacroMove {
  VertexId dest;
  Cost dist;
  EdgeId first;
};

struct MemoEntry {
  Cost value;
  bool exact;
};

}  // namespace

Cost StaticShortestPath(const StaticGraph& g, VertexId s, VertexId t) {
  return DistancesTo(g, t).at(s);
}

class StaticSolver::Impl {
 public:
  Impl(const Instance& inst, const StaticOptions& options)
      : g_(inst.static_graph()),
        s_(inst.source),
        t_(inst.target),
        k_(inst.k),
        discovery_(options.discovery.value_or(
            inst.static_graph().directed() ? Discovery::kTail : Discovery::kIncident)),
        limits_(options.limits),
        h0_(DistancesTo(g_, t_)) {
    if (discovery_ == Discovery::kTail && !g_.directed()) {
      throw Error(ErrorCode::kInvalidArgument, "tail discovery needs a directed graph");
    }
  }

  std::vector<std::uint8_t> Statuses(const StaticKnowledge& k) const {
    if (k.blocked.size() != g_.num_edges()) {
      throw Error(ErrorCode::kInvalidArgument, "knowledge has wrong edge count");
    }
    std::vector<std::uint8_t> st(g_.num_edges(), kUndecided);
    for (std::size_t e = 0; e < st.size(); ++e) {
      const int b = k.blocked[e];
      if (b >= 0) st[e] = b >= g_.edges()[e].copies ? kBlocked : kOpen;
    }
    return st;
  }

  // Edges Blocker decides when Traveller first stands on v.
  std::span<const EdgeId> Revealed(VertexId v) const {
    return discovery_ == Discovery::kTail ? g_.out_edges(v) : g_.incident(v);
  }

  bool HasUndecided(VertexId v, const std::vector<std::uint8_t>& st) const {
    for (EdgeId e : Revealed(v)) {
      if (st[e] == kUndecided) return true;
    }
    return false;
  }

  // Cheapest routes over open edges to t and to vertices with a pending
  // reveal, passing only through vertices without one.
  std::vector<MacroMove> Moves(VertexId pos, const std::vector<std::uint8_t>& st) const {
    const std::size_t n = g_.num_vertices();
    std::vector<Cost> dist(n, kUnreachable);
    std::vector<EdgeId> first(n, -1);
    std::vector<bool> done(n, false);
    using Item = std::tuple<Cost, VertexId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    dist[pos] = 0;
    queue.emplace(0, pos);
    std::vector<MacroMove> moves;
    while (!queue.empty()) {
      auto [d, v] = queue.top();
      queue.pop();
      if (done[v]) continue;
      done[v] = true;
      if (v != pos && (v == t_ || HasUndecided(v, st))) {
        moves.push_back(MacroMove{v, d, first[v]});
        continue;
      }
      for (EdgeId e : g_.out_edges(v)) {
        if (st[e] != kOpen) continue;
        const VertexId u = g_.head(e, v);
        const Cost nd = d + g_.edge(e).weight;
        if (nd < dist[u]) {
          dist[u] = nd;
          first[u] = v == pos ? e : first[v];
          queue.emplace(nd, u);
        }
      }
    }
    std::sort(moves.begin(), moves.end(), [&](const MacroMove& a, const MacroMove& b) {
      const Cost la = AddCost(a.dist, h0_[a.dest]);
      const Cost lb = AddCost(b.dist, h0_[b.dest]);
      if (la != lb) return la < lb;
      return a.dest < b.dest;
    });
    return moves;
  }

  // Traveller to move from pos; all of pos's edges are decided.
  Cost Travel(VertexId pos, int used, std::vector<std::uint8_t>& st, Cost bound,
              std::optional<EdgeId>* choice = nullptr) {
    if (pos == t_) return 0;
    Cost best = kUnreachable;
    Cost lower = kUnreachable;
    for (const MacroMove& m : Moves(pos, st)) {
      const Cost cap = std::min(bound, best - 1);
      const Cost estimate = AddCost(m.dist, h0_[m.dest]);
      if (estimate > cap) {
        lower = std::min(lower, estimate);
        break;  // moves are sorted by estimate
      }
      const Cost r = AddCost(m.dist, Arrive(m.dest, used, st, cap - m.dist));
      if (r <= cap) {
        best = r;
        if (choice) *choice = m.first;
      } else {
        lower = std::min(lower, r);
      }
    }
    return best <= bound ? best : std::min(lower, best);
  }

  Cost Arrive(VertexId pos, int used, std::vector<std::uint8_t>& st, Cost bound) {
    if (pos == t_) return 0;
    std::string key = Key(pos, used, st);
    if (auto it = memo_.find(key); it != memo_.end()) {
      if (it->second.exact || it->second.value > bound) return it->second.value;
    }
    if (!limits_.override && memo_.size() >= limits_.max_states) {
      throw Error(ErrorCode::kSizeLimit, "static game state limit exceeded");
    }
    Cost worst = 0;
    bool cut = false;
    ForEachReveal(pos, used, st, [&](int spent) {
      const Cost r = Travel(pos, used + spent, st, bound);
      worst = std::max(worst, r);
      cut = r > bound;
      return cut;
    });
    memo_[std::move(key)] = MemoEntry{worst, !cut || worst == kUnreachable};
    return worst;
  }

  // Applies each full-block subset of pos's undecided edges, cheapest first,
  // and calls visit(spent); stops when visit returns true. Returns the edges
  // of the subset that stopped the scan.
  template <typename Visit>
  std::vector<EdgeId> ForEachReveal(VertexId pos, int used,
                                    std::vector<std::uint8_t>& st, Visit visit) {
    const int budget = k_ - used;
    std::vector<EdgeId> fresh;
    std::vector<EdgeId> choosable;
    for (EdgeId e : Revealed(pos)) {
      if (st[e] != kUndecided) continue;
      fresh.push_back(e);
      if (g_.edge(e).copies <= budget) choosable.push_back(e);
    }
    if (choosable.size() > 24) {
      throw Error(ErrorCode::kSizeLimit, "too many blockable edges at one vertex");
    }
    std::vector<std::pair<int, std::uint32_t>> subsets;
    for (std::uint32_t mask = 0; mask < (1u << choosable.size()); ++mask) {
      int cost = 0;
      for (std::size_t i = 0; i < choosable.size(); ++i) {
        if (mask >> i & 1u) cost += g_.edge(choosable[i]).copies;
      }
      if (cost <= budget) subsets.emplace_back(cost, mask);
    }
    std::sort(subsets.begin(), subsets.end());
    std::vector<EdgeId> stop;
    for (const auto& [cost, mask] : subsets) {
      for (EdgeId e : fresh) st[e] = kOpen;
      std::vector<EdgeId> chosen;
      for (std::size_t i = 0; i < choosable.size(); ++i) {
        if (mask >> i & 1u) {
          st[choosable[i]] = kBlocked;
          chosen.push_back(choosable[i]);
        }
      }
      if (visit(cost)) {
        stop = std::move(chosen);
        break;
      }
    }
    for (EdgeId e : fresh) st[e] = kUndecided;
    return stop;
  }

  std::string Key(VertexId pos, int used, const std::vector<std::uint8_t>& st) const {
    std::string key;
    key.reserve(8 + st.size() / 4);
    key.append(reinterpret_cast<const char*>(&pos), sizeof(pos));
    key.push_back(static_cast<char>(used));
    std::uint8_t byte = 0;
    int fill = 0;
    for (std::uint8_t v : st) {
      byte = static_cast<std::uint8_t>(byte | v << (2 * fill));
      if (++fill == 4) {
        key.push_back(static_cast<char>(byte));
        byte = 0;
        fill = 0;
      }
    }
    if (fill > 0) key.push_back(static_cast<char>(byte));
    return key;
  }

  const StaticGraph& g_;
  VertexId s_;
  VertexId t_;
  int k_;
  Discovery discovery_;
  SearchLimits limits_;
  std::vector<Cost> h0_;
  std::unordered_map<std::string, MemoEntry> memo_;
};

StaticSolver::StaticSolver(const Instance& inst, const StaticOptions& options)
    : impl_(std::make_unique<Impl>(inst, options)) {}
StaticSolver::~StaticSolver() = default;
StaticSolver::StaticSolver(StaticSolver&&) noexcept = default;
StaticSolver& StaticSolver::operator=(StaticSolver&&) noexcept = default;

StaticKnowledge StaticSolver::Initial() const {
  StaticKnowledge k;
  k.pos = impl_->s_;
  k.blocked.assign(impl_->g_.num_edges(), -1);
  return k;
}

Cost StaticSolver::ArrivalValue(const StaticKnowledge& k, Cost bound) {
  auto st = impl_->Statuses(k);
  return impl_->Arrive(k.pos, k.used, st, bound);
}

Cost StaticSolver::Value(const StaticKnowledge& k, Cost bound) {
  auto st = impl_->Statuses(k);
  return impl_->Travel(k.pos, k.used, st, bound);
}

std::optional<EdgeId> StaticSolver::BestEdge(const StaticKnowledge& k) {
  auto st = impl_->Statuses(k);
  std::optional<EdgeId> choice;
  impl_->Travel(k.pos, k.used, st, kUnreachable - 1, &choice);
  return choice;
}

std::vector<EdgeId> StaticSolver::BestReveal(const StaticKnowledge& k) {
  auto st = impl_->Statuses(k);
  Cost worst = -1;
  std::vector<EdgeId> best;
  // The first subset attaining the maximum wins ties.
  impl_->ForEachReveal(k.pos, k.used, st, [&](int spent) {
    const Cost r = impl_->Travel(k.pos, k.used + spent, st, kUnreachable - 1);
    std::vector<EdgeId> chosen;
    for (EdgeId e : impl_->Revealed(k.pos)) {
      if (k.blocked[e] < 0 && st[e] == kBlocked) chosen.push_back(e);
    }
    if (r > worst) {
      worst = r;
      best = std::move(chosen);
    }
    return worst == kUnreachable;
  });
  return best;
}

std::size_t StaticSolver::states() const { return impl_->memo_.size(); }

Cost ExactStaticValue(const Instance& inst, const StaticOptions& options) {
  StaticSolver solver(inst, options);
  return solver.ArrivalValue(solver.Initial());
}

bool DecideStatic(const Instance& inst, Cost deadline, const StaticOptions& options) {
  if (deadline < 0) return false;
  StaticSolver solver(inst, options);
  return solver.ArrivalValue(solver.Initial(), deadline) <= deadline;
}

}  // namespace tctp
