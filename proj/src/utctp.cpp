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

#include "tctp/utctp.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>
#include <vector>

namespace tctp {

UStrategy SolveU(const Instance& inst, Time t1, Time t2) {
  UStrategy u;
  u.expansion = BuildExpansion(inst, t1, t2);
  u.pi = ComputePi(u.expansion.dag, u.expansion.target, inst.k);
  // Path costs are arrival minus t1 and every arc lands inside the window,
  // so any finite value meets the deadline.
  const Cost budget = t2 == kForever ? kUnreachable - 1 : t2 - t1;
  u.wins = DecideDag(u.pi, u.expansion.source, budget);
  return u;
}

bool DecideU(const Instance& inst, Time t1, Time t2) {
  if (inst.source == inst.target) return t1 <= t2;
  return SolveU(inst, t1, t2).wins;
}

namespace {

std::vector<Time> ArrivalEvents(const TemporalGraph& g) {
  std::set<Time> events;
  for (const TimeEdge& e : g.edges()) events.insert(e.tau + e.d);
  return {events.begin(), events.end()};
}

std::vector<Time> DepartureEvents(const TemporalGraph& g) {
  std::set<Time> events;
  for (const TimeEdge& e : g.edges()) events.insert(e.tau);
  return {events.begin(), events.end()};
}

Time Horizon(const Instance& inst) {
  return inst.deadline ? *inst.deadline : kForever;
}

}  // namespace

std::optional<Time> EarliestArrival(const Instance& inst) {
  if (inst.source == inst.target) return 0;
  for (Time t2 : ArrivalEvents(inst.temporal())) {
    if (t2 > Horizon(inst)) break;
    if (DecideU(inst, 0, t2)) return t2;
  }
  return std::nullopt;
}

std::optional<Time> LatestDeparture(const Instance& inst) {
  if (inst.source == inst.target) return kForever;
  const std::vector<Time> events = DepartureEvents(inst.temporal());
  for (auto it = events.rbegin(); it != events.rend(); ++it) {
    if (*it > Horizon(inst)) continue;
    if (DecideU(inst, *it, Horizon(inst))) return *it;
  }
  return std::nullopt;
}

std::optional<std::pair<Time, Time>> ShortestDuration(const Instance& inst) {
  if (inst.source == inst.target) return std::make_pair(Time{0}, Time{0});
  const std::vector<Time> arrivals = ArrivalEvents(inst.temporal());
  std::optional<std::pair<Time, Time>> best;
  for (Time t1 : DepartureEvents(inst.temporal())) {
    for (Time t2 : arrivals) {
      if (t2 <= t1 || t2 > Horizon(inst)) continue;
      if (best && t2 - t1 >= best->second - best->first) break;
      if (DecideU(inst, t1, t2)) {
        best = std::make_pair(t1, t2);
        break;
      }
    }
  }
  return best;
}

namespace {

class BruteU {
 public:
  BruteU(const Instance& inst, Time t2, Time horizon, const SearchLimits& limits)
      : g_(inst.temporal()), target_(inst.target), t2_(t2), horizon_(horizon),
        limits_(limits) {}

  bool Win(VertexId v, Time clock, int budget) {
    if (v == target_) return clock <= t2_;
    if (clock > horizon_) return false;
    const auto key = std::make_tuple(v, clock, budget);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (!limits_.override && memo_.size() >= limits_.max_states) {
      throw Error(ErrorCode::kSizeLimit, "uninformed game state limit exceeded");
    }
    std::vector<EdgeId> now;
    for (EdgeId e : g_.incident(v)) {
      if (g_.edge(e).tau == clock) now.push_back(e);
    }
    std::vector<int> blocked(now.size(), 0);
    const bool result = !BlockerWins(v, clock, budget, now, blocked, 0);
    memo_.emplace(key, result);
    return result;
  }

 private:
  bool BlockerWins(VertexId v, Time clock, int budget,
                   const std::vector<EdgeId>& now, std::vector<int>& blocked,
                   std::size_t i) {
    if (i == now.size()) return !TravellerWins(v, clock, budget, now, blocked);
    const int copies = g_.edge(now[i]).copies;
    for (int c = 0; c <= std::min(budget, copies); ++c) {
      blocked[i] = c;
      if (BlockerWins(v, clock, budget - c, now, blocked, i + 1)) {
        blocked[i] = 0;
        return true;
      }
    }
    blocked[i] = 0;
    return false;
  }

  bool TravellerWins(VertexId v, Time clock, int budget,
                     const std::vector<EdgeId>& now,
                     const std::vector<int>& blocked) {
    for (std::size_t i = 0; i < now.size(); ++i) {
      const TimeEdge& e = g_.edge(now[i]);
      if (blocked[i] >= e.copies) continue;
      if (e.tau + e.d > t2_) continue;
      if (Win(e.other(v), e.tau + e.d, budget)) return true;
    }
    return clock + 1 <= horizon_ && Win(v, clock + 1, budget);
  }

  const TemporalGraph& g_;
  VertexId target_;
  Time t2_;
  Time horizon_;
  SearchLimits limits_;
  std::map<std::tuple<VertexId, Time, int>, bool> memo_;
};

}  // namespace

bool BruteUGame(const Instance& inst, Time t1, Time t2,
                const SearchLimits& limits) {
  const TemporalGraph& g = inst.temporal();
  if (!limits.override &&
      (g.num_vertices() > 6 || Lifespan(g) > 6 || inst.k > 2)) {
    throw Error(ErrorCode::kSizeLimit, "instance too large for exhaustive play");
  }
  if (t1 > t2) throw Error(ErrorCode::kInvalidArgument, "window has T1 > T2");
  if (inst.source == inst.target) return true;
  Time last = t1;
  for (const TimeEdge& e : g.edges()) last = std::max(last, e.tau + e.d);
  const Time horizon = std::min(t2, last);
  return BruteU(inst, t2, horizon, limits).Win(inst.source, t1, inst.k);
}

}  // namespace tctp
