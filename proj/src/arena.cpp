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

#include "tctp/arena.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"

namespace tctp {

const char* ToString(GameModel model) {
  switch (model) {
    case GameModel::kLi: return "li";
    case GameModel::kU: return "u";
    case GameModel::kStatic: return "static";
    case GameModel::kDag: return "dag";
  }
  return "?";
}

std::optional<GameModel> ParseGameModel(const std::string& tag) {
  for (GameModel m : {GameModel::kLi, GameModel::kU, GameModel::kStatic, GameModel::kDag}) {
    if (tag == ToString(m)) return m;
  }
  return std::nullopt;
}

GameRules DefaultRules(const Instance& inst) {
  GameRules rules;
  switch (inst.model) {
    case Model::kTemporal: rules.model = GameModel::kLi; break;
    case Model::kStatic: rules.model = GameModel::kStatic; break;
    case Model::kDag: rules.model = GameModel::kDag; break;
  }
  if (inst.deadline) rules.deadline = *inst.deadline;
  return rules;
}

Game::Game(const Instance& inst, const GameRules& rules) : inst_(&inst), rules_(rules) {
  const bool wants_temporal = rules.model == GameModel::kLi || rules.model == GameModel::kU;
  if (wants_temporal != (inst.model == Model::kTemporal)) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("model ") + ToString(rules.model) + " does not fit a " +
                    tctp::ToString(inst.model) + " instance");
  }
  if (rules.model == GameModel::kDag && !inst.static_graph().directed()) {
    throw Error(ErrorCode::kInvalidArgument, "dag model needs a directed graph");
  }
  transcript_.model = rules.model;
  state_.pos = inst.source;
  state_.clock = wants_temporal ? rules.t1 : 0;
  state_.blocked.assign(num_edges(), -1);
  state_.visited.assign(inst.num_vertices(), false);
  CheckPosition();
}

bool Game::temporal() const { return inst_->model == Model::kTemporal; }

std::size_t Game::num_edges() const {
  return temporal() ? inst_->temporal().num_edges() : inst_->static_graph().num_edges();
}

int Game::copies(EdgeId e) const {
  return temporal() ? inst_->temporal().edge(e).copies : inst_->static_graph().edge(e).copies;
}

std::vector<EdgeId> Game::Offered() const {
  std::vector<EdgeId> out;
  if (over_) return out;
  const VertexId v = state_.pos;
  switch (rules_.model) {
    case GameModel::kLi:
      if (state_.visited[v]) break;
      for (EdgeId e : inst_->temporal().incident(v)) {
        if (inst_->temporal().edge(e).tau >= state_.clock && state_.blocked[e] < 0) {
          out.push_back(e);
        }
      }
      break;
    case GameModel::kU:
      for (EdgeId e : inst_->temporal().incident(v)) {
        if (inst_->temporal().edge(e).tau == state_.clock && state_.blocked[e] < 0) {
          out.push_back(e);
        }
      }
      break;
    case GameModel::kStatic:
    case GameModel::kDag:
      if (state_.visited[v]) break;
      for (EdgeId e : inst_->static_graph().out_edges(v)) {
        if (state_.blocked[e] < 0) out.push_back(e);
      }
      break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void Game::ApplyReveal(std::span<const EdgeBlock> blocks) {
  if (over_) return;
  const std::vector<EdgeId> offered = Offered();
  std::vector<int> statuses(offered.size(), 0);
  int total = 0;
  for (const EdgeBlock& b : blocks) {
    auto it = std::lower_bound(offered.begin(), offered.end(), b.edge);
    if (it == offered.end() || *it != b.edge) {
      Forfeit(Player::kBlocker, "edge " + std::to_string(b.edge) + " is not revealed here");
      return;
    }
    int& status = statuses[it - offered.begin()];
    if (status != 0 || b.copies < 0 || b.copies > copies(b.edge)) {
      Forfeit(Player::kBlocker, "bad block on edge " + std::to_string(b.edge));
      return;
    }
    status = b.copies;
    total += b.copies;
  }
  if (state_.used + total > inst_->k) {
    Forfeit(Player::kBlocker, "blocks exceed the budget");
    return;
  }
  for (std::size_t i = 0; i < offered.size(); ++i) state_.blocked[offered[i]] = statuses[i];
  state_.used += total;
  state_.visited[state_.pos] = true;
  Event ev;
  ev.kind = Event::Kind::kReveal;
  ev.vertex = state_.pos;
  ev.edges = offered;
  ev.statuses = std::move(statuses);
  ev.from = state_.clock;
  transcript_.events.push_back(std::move(ev));
}

void Game::ApplyAction(const Action& action) {
  if (over_) return;
  if (!Offered().empty()) {
    throw Error(ErrorCode::kInvalidArgument, "reveal pending before Traveller acts");
  }
  if (++actions_ > rules_.max_actions) {
    Finish(Outcome::kBlockerWin, std::nullopt, "action limit reached");
    return;
  }
  const VertexId v = state_.pos;
  switch (action.kind) {
    case Action::Kind::kStop:
      Finish(Outcome::kBlockerWin, std::nullopt, "traveller stopped");
      return;
    case Action::Kind::kWait: {
      if (!temporal() || action.until <= state_.clock) {
        Forfeit(Player::kTraveller, "illegal wait");
        return;
      }
      Event ev;
      ev.kind = Event::Kind::kWait;
      ev.vertex = v;
      ev.from = state_.clock;
      ev.to_time = action.until;
      transcript_.events.push_back(ev);
      state_.clock = action.until;
      CheckPosition();
      return;
    }
    case Action::Kind::kMove:
      break;
  }
  const EdgeId e = action.edge;
  if (e < 0 || static_cast<std::size_t>(e) >= num_edges() || state_.blocked[e] < 0 ||
      state_.blocked[e] >= copies(e)) {
    Forfeit(Player::kTraveller, "edge " + std::to_string(e) + " is not known open");
    return;
  }
  Event ev;
  ev.kind = Event::Kind::kMove;
  ev.vertex = v;
  ev.edge = e;
  if (temporal()) {
    const TimeEdge& te = inst_->temporal().edge(e);
    const bool timely = rules_.model == GameModel::kU ? te.tau == state_.clock
                                                       : te.tau >= state_.clock;
    if (!te.touches(v) || !timely) {
      Forfeit(Player::kTraveller, "edge " + std::to_string(e) + " cannot be taken now");
      return;
    }
    if (te.tau > state_.clock) {
      Event wait;
      wait.kind = Event::Kind::kWait;
      wait.vertex = v;
      wait.from = state_.clock;
      wait.to_time = te.tau;
      transcript_.events.push_back(wait);
    }
    ev.to = te.other(v);
    ev.from = te.tau;
    ev.to_time = te.tau + te.d;
  } else {
    const StaticGraph& g = inst_->static_graph();
    const auto out = g.out_edges(v);
    if (std::find(out.begin(), out.end(), e) == out.end()) {
      Forfeit(Player::kTraveller, "edge " + std::to_string(e) + " does not leave here");
      return;
    }
    ev.to = g.head(e, v);
    ev.from = state_.clock;
    ev.to_time = AddCost(state_.clock, g.edge(e).weight);
  }
  transcript_.events.push_back(ev);
  state_.pos = ev.to;
  state_.clock = ev.to_time;
  CheckPosition();
}

void Game::Forfeit(Player offender, std::string reason) {
  Finish(offender == Player::kTraveller ? Outcome::kBlockerWin : Outcome::kTravellerWin,
         offender, std::move(reason));
}

void Game::Finish(Outcome outcome, std::optional<Player> foul, std::string reason) {
  over_ = true;
  transcript_.outcome = outcome;
  transcript_.foul = foul;
  transcript_.reason = std::move(reason);
  transcript_.final_time = state_.clock;
  transcript_.budget_spent = state_.used;
}

void Game::CheckPosition() {
  if (state_.clock > rules_.deadline) {
    Finish(Outcome::kBlockerWin, std::nullopt, "deadline passed");
  } else if (state_.pos == inst_->target) {
    Finish(Outcome::kTravellerWin, std::nullopt, "reached target");
  }
}

std::string Game::Key() const {
  std::string key;
  key.reserve(16 + state_.blocked.size() + state_.visited.size());
  key += std::to_string(state_.pos) + ':' + std::to_string(state_.clock) + ':' +
         std::to_string(state_.used) + ':';
  for (int b : state_.blocked) key += static_cast<char>('a' + b + 1);
  key += ':';
  for (bool seen : state_.visited) key += seen ? '1' : '0';
  return key;
}

namespace {

void TravellerTurn(Game& game, TravellerPolicy& traveller) {
  Action action;
  try {
    action = traveller.Act(game.view());
  } catch (const Error& e) {
    game.Forfeit(Player::kTraveller, std::string("policy error: ") + e.what());
    return;
  }
  game.ApplyAction(action);
}

}  // namespace

Transcript Play(const Instance& inst, TravellerPolicy& traveller,
                BlockerPolicy& blocker, const GameRules& rules) {
  Game game(inst, rules);
  while (!game.over()) {
    const std::vector<EdgeId> offered = game.Offered();
    if (offered.empty()) {
      TravellerTurn(game, traveller);
      continue;
    }
    std::vector<EdgeBlock> blocks;
    try {
      blocks = blocker.Reveal(game.view(), offered);
    } catch (const Error& e) {
      game.Forfeit(Player::kBlocker, std::string("policy error: ") + e.what());
      break;
    }
    game.ApplyReveal(blocks);
  }
  return game.transcript();
}

VerifyResult VerifyTravellerStrategy(const Instance& inst, TravellerPolicy& traveller,
                                     const GameRules& rules, const SearchLimits& limits) {
  VerifyResult result;
  std::unordered_set<std::string> won;

  std::function<std::optional<Transcript>(Game)> explore =
      [&](Game game) -> std::optional<Transcript> {
    while (true) {
      if (game.over()) {
        if (game.transcript().outcome == Outcome::kTravellerWin) return std::nullopt;
        return game.transcript();
      }
      const std::vector<EdgeId> offered = game.Offered();
      if (offered.empty()) {
        TravellerTurn(game, traveller);
        continue;
      }
      const std::string key = game.Key();
      if (won.count(key) != 0) return std::nullopt;
      if (!limits.override && ++result.states > limits.max_states) {
        throw Error(ErrorCode::kSizeLimit, "strategy verification exceeds the state limit");
      }
      const int budget = inst.k - game.state().used;
      std::vector<EdgeBlock> blocks;
      std::optional<Transcript> bad;
      std::function<bool(std::size_t, int)> choose = [&](std::size_t i, int left) {
        if (i == offered.size()) {
          Game next = game;
          next.ApplyReveal(blocks);
          bad = explore(std::move(next));
          return bad.has_value();
        }
        const EdgeId e = offered[i];
        const int cap = inst.model == Model::kTemporal ? inst.temporal().edge(e).copies
                                                       : inst.static_graph().edge(e).copies;
        for (int c = 0; c <= std::min(cap, left); ++c) {
          if (c > 0) blocks.push_back(EdgeBlock{e, c});
          const bool stop = choose(i + 1, left - c);
          if (c > 0) blocks.pop_back();
          if (stop) return true;
        }
        return false;
      };
      if (choose(0, budget)) return bad;
      won.insert(key);
      return std::nullopt;
    }
  };

  if (auto bad = explore(Game(inst, rules))) {
    result.ok = false;
    result.counterexample = std::move(bad);
  }
  result.states = std::max(result.states, won.size());
  return result;
}

// ---------------------------------------------------------------------------

namespace {

using nlohmann::json;

const char* OutcomeName(Outcome o) {
  return o == Outcome::kTravellerWin ? "TRAVELLER_WIN" : "BLOCKER_WIN";
}

json EdgeJson(const Instance& inst, EdgeId e) {
  json j;
  j["edge"] = e;
  const VertexNames& names = inst.names();
  if (inst.model == Model::kTemporal) {
    const TimeEdge& te = inst.temporal().edge(e);
    j["u"] = names.name(te.u);
    j["v"] = names.name(te.v);
    j["tau"] = te.tau;
    j["d"] = te.d;
    j["copies"] = te.copies;
  } else {
    const StaticEdge& se = inst.static_graph().edge(e);
    j["u"] = names.name(se.u);
    j["v"] = names.name(se.v);
    j["weight"] = se.weight;
    j["copies"] = se.copies;
  }
  return j;
}

}  // namespace

std::string TranscriptToJsonLines(const Instance& inst, const Transcript& t) {
  const VertexNames& names = inst.names();
  std::unordered_map<EdgeId, int> status;
  std::ostringstream out;
  for (const Event& ev : t.events) {
    json j;
    switch (ev.kind) {
      case Event::Kind::kReveal: {
        j["event"] = "REVEAL";
        j["vertex"] = names.name(ev.vertex);
        j["time"] = ev.from;
        json edges = json::array();
        for (std::size_t i = 0; i < ev.edges.size(); ++i) {
          json e = EdgeJson(inst, ev.edges[i]);
          e["blocked"] = ev.statuses[i];
          status[ev.edges[i]] = ev.statuses[i];
          edges.push_back(std::move(e));
        }
        j["edges"] = std::move(edges);
        break;
      }
      case Event::Kind::kMove:
        j["event"] = "MOVE";
        j["edge"] = ev.edge;
        j["from"] = names.name(ev.vertex);
        j["to"] = names.name(ev.to);
        j["copy"] = status[ev.edge];
        j["depart"] = ev.from;
        j["arrive"] = ev.to_time;
        break;
      case Event::Kind::kWait:
        j["event"] = "WAIT";
        j["vertex"] = names.name(ev.vertex);
        j["from"] = ev.from;
        j["until"] = ev.to_time;
        break;
    }
    out << j.dump() << '\n';
  }
  json summary;
  summary["outcome"] = OutcomeName(t.outcome);
  summary["model"] = ToString(t.model);
  summary["final_time"] = t.final_time;
  summary["budget_spent"] = t.budget_spent;
  summary["foul"] = t.foul ? json(*t.foul == Player::kTraveller ? "TRAVELLER" : "BLOCKER")
                           : json(nullptr);
  summary["reason"] = t.reason;
  out << summary.dump() << '\n';
  return out.str();
}

Transcript TranscriptFromJsonLines(const Instance& inst, std::string_view text) {
  Transcript t;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  bool summary = false;
  try {
    while (std::getline(in, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      const json j = json::parse(line);
      if (j.contains("outcome")) {
        t.outcome = j.at("outcome") == "TRAVELLER_WIN" ? Outcome::kTravellerWin
                                                       : Outcome::kBlockerWin;
        auto model = ParseGameModel(j.at("model").get<std::string>());
        if (!model) throw Error(ErrorCode::kParse, "unknown model");
        t.model = *model;
        t.final_time = j.at("final_time").get<Time>();
        t.budget_spent = j.at("budget_spent").get<int>();
        if (!j.at("foul").is_null()) {
          t.foul = j.at("foul") == "TRAVELLER" ? Player::kTraveller : Player::kBlocker;
        }
        t.reason = j.value("reason", "");
        summary = true;
        continue;
      }
      Event ev;
      const std::string kind = j.at("event").get<std::string>();
      if (kind == "REVEAL") {
        ev.kind = Event::Kind::kReveal;
        ev.vertex = inst.names().at(j.at("vertex").get<std::string>());
        ev.from = j.at("time").get<Time>();
        for (const json& e : j.at("edges")) {
          ev.edges.push_back(e.at("edge").get<EdgeId>());
          ev.statuses.push_back(e.at("blocked").get<int>());
        }
      } else if (kind == "MOVE") {
        ev.kind = Event::Kind::kMove;
        ev.edge = j.at("edge").get<EdgeId>();
        ev.vertex = inst.names().at(j.at("from").get<std::string>());
        ev.to = inst.names().at(j.at("to").get<std::string>());
        ev.from = j.at("depart").get<Time>();
        ev.to_time = j.at("arrive").get<Time>();
      } else if (kind == "WAIT") {
        ev.kind = Event::Kind::kWait;
        ev.vertex = inst.names().at(j.at("vertex").get<std::string>());
        ev.from = j.at("from").get<Time>();
        ev.to_time = j.at("until").get<Time>();
      } else {
        throw Error(ErrorCode::kParse, "unknown event '" + kind + "'");
      }
      t.events.push_back(std::move(ev));
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, "line " + std::to_string(lineno) + ": " + e.what());
  } catch (const Error& e) {
    throw Error(ErrorCode::kParse, "line " + std::to_string(lineno) + ": " + e.what());
  }
  if (!summary) throw Error(ErrorCode::kParse, "missing summary line");
  return t;
}

}  // namespace tctp
