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

#include "tctp/litctp.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>
#include <utility>

namespace tctp {

Time LatestWalkDeparture(const TemporalGraph& g, VertexId v, VertexId t,
                         Time deadline, EdgeId removed) {
  std::vector<Time> latest(g.num_vertices(), kNever);
  latest.at(t) = deadline;
  std::vector<EdgeId> order(g.num_edges());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
    return g.edge(a).tau > g.edge(b).tau;
  });
  for (EdgeId id : order) {
    const TimeEdge& e = g.edge(id);
    if (id == removed && e.copies == 1) continue;
    // kNever and kForever compare correctly against any finite arrival.
    const Time arrival = e.tau + e.d;
    if (latest[e.v] != kNever && arrival <= latest[e.v]) {
      latest[e.u] = std::max(latest[e.u], e.tau);
    }
    if (latest[e.u] != kNever && arrival <= latest[e.u]) {
      latest[e.v] = std::max(latest[e.v], e.tau);
    }
  }
  latest[t] = deadline;
  return latest.at(v);
}

Time ComputeMu(const TemporalGraph& g, VertexId t, Time deadline, VertexId v,
               EdgeId e) {
  if (!g.edge(e).touches(v)) {
    throw Error(ErrorCode::kInvalidArgument, "edge is not incident to v");
  }
  return LatestWalkDeparture(g, v, t, deadline, e);
}

Pi1Table SolveK1(const Instance& inst, const K1Options& options) {
  if (inst.k != 1) throw Error(ErrorCode::kInvalidArgument, "SolveK1 needs k == 1");
  const TemporalGraph& g = inst.temporal();
  const auto n = static_cast<VertexId>(g.num_vertices());
  const VertexId t = inst.target;
  const VertexId s = inst.source;

  Pi1Table r;
  r.deadline = options.deadline ? *options.deadline
                                : inst.deadline.value_or(kForever);
  r.lambda1.assign(n, kForever);
  r.nu1.assign(n, kNever);
  r.pi1.assign(n, kNever);

  // Latest departure towards a settled vertex u along edge e, or kNever.
  auto departure_into = [&](const TimeEdge& e, VertexId u) {
    return e.tau + e.d <= r.pi1[u] ? e.tau : kNever;
  };

  for (VertexId v = 0; v < n; ++v) {
    if (v == t) continue;
    for (EdgeId e : g.incident(v)) {
      r.lambda1[v] = std::min(r.lambda1[v], ComputeMu(g, t, r.deadline, v, e));
    }
  }
  std::vector<bool> settled(n, false);
  settled[t] = true;
  r.order.push_back(t);
  r.pi1[t] = r.deadline;
  for (EdgeId id : g.incident(t)) {
    const TimeEdge& e = g.edge(id);
    const VertexId v = e.other(t);
    r.nu1[v] = std::max(r.nu1[v], departure_into(e, t));
  }
  for (VertexId v = 0; v < n; ++v) {
    if (v != t) r.pi1[v] = std::min(r.lambda1[v], r.nu1[v]);
  }

  auto done = [&] {
    if (options.settle_all) return static_cast<VertexId>(r.order.size()) == n;
    return static_cast<bool>(settled[s]);
  };
  while (!done()) {
    VertexId best = kNoVertex;
    for (VertexId v = 0; v < n; ++v) {
      if (!settled[v] && (best == kNoVertex || r.pi1[v] > r.pi1[best])) best = v;
    }
    settled[best] = true;
    r.order.push_back(best);
    for (EdgeId id : g.incident(best)) {
      const TimeEdge& e = g.edge(id);
      const VertexId v = e.other(best);
      if (settled[v]) continue;
      r.nu1[v] = std::max(r.nu1[v], departure_into(e, best));
      r.pi1[v] = std::min(r.lambda1[v], r.nu1[v]);
    }
  }
  r.wins = options.start <= r.pi1[s];
  return r;
}

// ---------------------------------------------------------------------------

namespace {

enum Status : std::uint8_t { kUndecided = 0, kOpen = 1, kBlocked = 2 };

}  // namespace

class LiSolver::Impl {
 public:
  Impl(const Instance& inst, Time t1, Time t2, const SearchLimits& limits)
      : g_(inst.temporal()),
        s_(inst.source),
        t_(inst.target),
        k_(inst.k),
        t1_(t1),
        t2_(t2),
        limits_(limits) {
    if (t1 > t2) throw Error(ErrorCode::kInvalidArgument, "window has T1 > T2");
    relevant_.assign(g_.num_edges(), -1);
    incident_.resize(g_.num_vertices());
    for (std::size_t i = 0; i < g_.num_edges(); ++i) {
      const TimeEdge& e = g_.edges()[i];
      if (e.tau < t1 || e.tau > t2 - e.d) continue;
      relevant_[i] = static_cast<int>(ids_.size());
      ids_.push_back(static_cast<EdgeId>(i));
      events_.push_back(e.tau);
    }
    for (VertexId v = 0; v < static_cast<VertexId>(g_.num_vertices()); ++v) {
      for (EdgeId e : g_.incident(v)) {
        if (relevant_[e] >= 0) incident_[v].push_back(relevant_[e]);
      }
    }
    std::sort(events_.begin(), events_.end());
    events_.erase(std::unique(events_.begin(), events_.end()), events_.end());
  }

  LiKnowledge Initial() const {
    LiKnowledge k;
    k.pos = s_;
    k.clock = t1_;
    k.blocked.assign(g_.num_edges(), -1);
    return k;
  }

  std::vector<std::uint8_t> Statuses(const LiKnowledge& k) const {
    if (k.blocked.size() != g_.num_edges()) {
      throw Error(ErrorCode::kInvalidArgument, "knowledge has wrong edge count");
    }
    std::vector<std::uint8_t> st(ids_.size(), kUndecided);
    for (std::size_t r = 0; r < ids_.size(); ++r) {
      const int b = k.blocked[ids_[r]];
      if (b >= 0) st[r] = b >= g_.edge(ids_[r]).copies ? kBlocked : kOpen;
    }
    return st;
  }

  bool Arrive(VertexId pos, Time clock, int used, std::vector<std::uint8_t>& st) {
    if (pos == t_) return clock <= t2_;
    std::string key = Key(pos, clock, used, st);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (!limits_.override && memo_.size() >= limits_.max_states) {
      throw Error(ErrorCode::kSizeLimit, "locally informed state limit exceeded");
    }
    bool wins = true;
    ForEachReveal(pos, clock, used, st, [&](int spent) {
      if (!Move(pos, clock, used + spent, st)) {
        wins = false;
        return true;
      }
      return false;
    });
    memo_.emplace(std::move(key), wins);
    return wins;
  }

  bool Move(VertexId pos, Time clock, int used, std::vector<std::uint8_t>& st) {
    return BestMoveIndex(pos, clock, used, st) >= 0;
  }

  // Relevant index of the first winning move, or -1.
  int BestMoveIndex(VertexId pos, Time clock, int used,
                    std::vector<std::uint8_t>& st) {
    for (int r : incident_[pos]) {
      const TimeEdge& e = g_.edge(ids_[r]);
      if (st[r] != kOpen || e.tau < clock) continue;
      if (Arrive(e.other(pos), e.tau + e.d, used, st)) return r;
    }
    return -1;
  }

  // Calls visit(spent) for every full-block subset of the undecided edges at
  // pos, cheapest first, with statuses applied; stops when visit returns
  // true. Returns the stopping subset as relevant indices, or nullopt.
  template <typename Visit>
  std::optional<std::vector<int>> ForEachReveal(VertexId pos, Time clock, int used,
                                                std::vector<std::uint8_t>& st,
                                                Visit visit) {
    const int budget = k_ - used;
    std::vector<int> fresh;
    std::vector<int> choosable;
    for (int r : incident_[pos]) {
      if (st[r] != kUndecided || g_.edge(ids_[r]).tau < clock) continue;
      fresh.push_back(r);
      if (g_.edge(ids_[r]).copies <= budget) choosable.push_back(r);
    }
    if (choosable.size() > 24) {
      throw Error(ErrorCode::kSizeLimit, "too many blockable edges at one vertex");
    }
    std::vector<std::pair<int, std::uint32_t>> subsets;
    for (std::uint32_t mask = 0; mask < (1u << choosable.size()); ++mask) {
      int cost = 0;
      for (std::size_t i = 0; i < choosable.size(); ++i) {
        if (mask >> i & 1u) cost += g_.edge(ids_[choosable[i]]).copies;
      }
      if (cost <= budget) subsets.emplace_back(cost, mask);
    }
    std::sort(subsets.begin(), subsets.end());
    std::optional<std::vector<int>> stop;
    for (const auto& [cost, mask] : subsets) {
      for (int r : fresh) st[r] = kOpen;
      std::vector<int> chosen;
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
    for (int r : fresh) st[r] = kUndecided;
    return stop;
  }

  std::string Key(VertexId pos, Time clock, int used,
                  const std::vector<std::uint8_t>& st) const {
    // Only edges at or after the clock matter; the clock itself is snapped
    // to the next relevant appearance time.
    auto it = std::lower_bound(events_.begin(), events_.end(), clock);
    const Time snapped = it == events_.end() ? kForever : *it;
    std::string key;
    key.reserve(16 + st.size() / 4);
    key.append(reinterpret_cast<const char*>(&pos), sizeof(pos));
    key.append(reinterpret_cast<const char*>(&snapped), sizeof(snapped));
    key.push_back(static_cast<char>(used));
    std::uint8_t byte = 0;
    int fill = 0;
    for (std::size_t r = 0; r < st.size(); ++r) {
      const std::uint8_t v = g_.edge(ids_[r]).tau >= clock ? st[r] : 0;
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

  const TemporalGraph& g_;
  VertexId s_;
  VertexId t_;
  int k_;
  Time t1_;
  Time t2_;
  SearchLimits limits_;
  std::vector<int> relevant_;            // graph edge -> relevant index
  std::vector<EdgeId> ids_;              // relevant index -> graph edge
  std::vector<std::vector<int>> incident_;
  std::vector<Time> events_;
  std::unordered_map<std::string, bool> memo_;
};

LiSolver::LiSolver(const Instance& inst, Time t1, Time t2,
                   const SearchLimits& limits)
    : impl_(std::make_unique<Impl>(inst, t1, t2, limits)) {}
LiSolver::~LiSolver() = default;
LiSolver::LiSolver(LiSolver&&) noexcept = default;
LiSolver& LiSolver::operator=(LiSolver&&) noexcept = default;

LiKnowledge LiSolver::Initial() const { return impl_->Initial(); }

bool LiSolver::Wins() { return WinsOnArrival(Initial()); }

bool LiSolver::WinsOnArrival(const LiKnowledge& k) {
  auto st = impl_->Statuses(k);
  return impl_->Arrive(k.pos, k.clock, k.used, st);
}

bool LiSolver::WinsAfterReveal(const LiKnowledge& k) {
  if (k.pos == impl_->t_) return k.clock <= impl_->t2_;
  auto st = impl_->Statuses(k);
  return impl_->Move(k.pos, k.clock, k.used, st);
}

std::optional<EdgeId> LiSolver::WinningMove(const LiKnowledge& k) {
  auto st = impl_->Statuses(k);
  const int r = impl_->BestMoveIndex(k.pos, k.clock, k.used, st);
  if (r < 0) return std::nullopt;
  return impl_->ids_[r];
}

std::vector<EdgeId> LiSolver::BestReveal(const LiKnowledge& k) {
  auto st = impl_->Statuses(k);
  auto stop = impl_->ForEachReveal(k.pos, k.clock, k.used, st, [&](int spent) {
    return !impl_->Move(k.pos, k.clock, k.used + spent, st);
  });
  std::vector<EdgeId> edges;
  if (stop) {
    for (int r : *stop) edges.push_back(impl_->ids_[r]);
  }
  return edges;
}

std::size_t LiSolver::states() const { return impl_->memo_.size(); }

bool ExactLi(const Instance& inst, Time t1, Time t2, const SearchLimits& limits) {
  if (inst.source == inst.target) return t1 <= t2;
  return LiSolver(inst, t1, t2, limits).Wins();
}

}  // namespace tctp
